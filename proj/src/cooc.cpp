#include "jpgram/cooc.hpp"

#include <algorithm>
#include <sstream>

namespace jpgram {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && (item.back() == '\r' || item.back() == ' ')) item.pop_back();
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    out.push_back(item);
  }
  return out;
}

int label_index(const std::vector<std::string>& labels, const std::string& name) {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw CoocError("unknown particle label '" + name + "'");
  return static_cast<int>(it - labels.begin());
}

}  // namespace

const std::vector<std::string>& cooc_row_labels() {
  static const std::vector<std::string> rows = {
      "ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa", "mo", "naNka", "to",
      "toshite", "toshimashite"};
  return rows;
}

const std::vector<std::string>& cooc_col_labels() {
  static const std::vector<std::string> cols = {
      "ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa", "mo", "naNka", "to"};
  return cols;
}

int CoocCounts::at(const std::string& left, const std::string& right) const {
  return cells[label_index(cooc_row_labels(), left)][label_index(cooc_col_labels(), right)];
}

bool LicensingMatrix::at(const std::string& left, const std::string& right) const {
  return cells[label_index(cooc_row_labels(), left)][label_index(cooc_col_labels(), right)];
}

CoocCounts load_table1(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    rows.push_back(split_csv(line));
  }
  if (rows.empty()) throw CoocError("empty counts table");

  std::vector<std::string> expected_header = {"left"};
  for (const auto& c : cooc_col_labels()) expected_header.push_back(c);
  if (rows[0] != expected_header) throw CoocError("malformed counts header");

  const auto& row_labels = cooc_row_labels();
  if (rows.size() - 1 != row_labels.size())
    throw CoocError("expected " + std::to_string(row_labels.size()) + " count rows, got " +
                    std::to_string(rows.size() - 1));

  CoocCounts counts;
  counts.cells.assign(row_labels.size(), std::vector<int>(cooc_col_labels().size(), 0));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.empty() || fields[0] != row_labels[r - 1])
      throw CoocError("unknown or misplaced row label '" +
                      (fields.empty() ? std::string() : fields[0]) + "'");
    if (fields.size() != cooc_col_labels().size() + 1)
      throw CoocError("row '" + fields[0] + "' has " + std::to_string(fields.size() - 1) +
                      " cells, expected " + std::to_string(cooc_col_labels().size()));
    for (std::size_t c = 1; c < fields.size(); ++c) {
      try {
        std::size_t used = 0;
        int v = std::stoi(fields[c], &used);
        if (used != fields[c].size() || v < 0) throw std::invalid_argument(fields[c]);
        counts.cells[r - 1][c - 1] = v;
      } catch (const std::exception&) {
        throw CoocError("non-integer cell '" + fields[c] + "' in row '" + fields[0] + "'");
      }
    }
  }
  return counts;
}

LicensingMatrix derive_licensing(const Lexicon& lexicon, const TypeLattice& lattice) {
  const auto& rows = cooc_row_labels();
  const auto& cols = cooc_col_labels();
  LicensingMatrix m;
  m.cells.assign(rows.size(), std::vector<bool>(cols.size(), false));

  // head types a phrase of this surface can carry
  auto phrase_types = [&](const std::string& surface) {
    std::vector<TypeId> types;
    for (const auto* e : lexicon.entries_for(surface))
      if (e->head.pos == Pos::particle) types.push_back(e->head.ptype);
    return types;
  };
  // particle-type categories this surface's entries subcategorize for
  auto accepted_types = [&](const std::string& surface) {
    std::vector<TypeId> types;
    for (const auto* e : lexicon.entries_for(surface)) {
      if (!e->subcat) continue;
      for (const auto& cat : e->subcat->takes)
        if (cat.kind == SubcatCat::Kind::particle_type) types.push_back(cat.type);
    }
    return types;
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto left_types = phrase_types(rows[r]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto right_accepts = accepted_types(cols[c]);
      bool licensed = false;
      for (TypeId lt : left_types) {
        for (TypeId cat : right_accepts)
          if (lattice.subsumes(cat, lt)) { licensed = true; break; }
        if (licensed) break;
      }
      m.cells[r][c] = licensed;
    }
  }
  return m;
}

ReconciliationReport reconcile(const LicensingMatrix& licensed, const CoocCounts& counts,
                               int threshold) {
  ReconciliationReport report;
  report.threshold = threshold;
  const auto& rows = cooc_row_labels();
  const auto& cols = cooc_col_labels();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const bool lic = licensed.cells[r][c];
      const int count = counts.cells[r][c];
      const bool attested = count >= threshold;
      if (lic && attested) report.licensed_and_attested.push_back({rows[r], cols[c]});
      else if (attested) report.attested_unlicensed.push_back({rows[r], cols[c], count});
      else if (lic) report.licensed_unattested.push_back({rows[r], cols[c]});
    }
  }
  return report;
}

namespace {

template <typename Cell>
std::string matrix_csv(const std::vector<std::vector<Cell>>& cells) {
  std::ostringstream o;
  o << "left";
  for (const auto& c : cooc_col_labels()) o << ',' << c;
  o << '\n';
  for (std::size_t r = 0; r < cooc_row_labels().size(); ++r) {
    o << cooc_row_labels()[r];
    for (std::size_t c = 0; c < cooc_col_labels().size(); ++c)
      o << ',' << static_cast<long long>(cells[r][c]);
    o << '\n';
  }
  return o.str();
}

}  // namespace

std::string to_csv(const CoocCounts& counts) { return matrix_csv(counts.cells); }

std::string to_csv(const LicensingMatrix& licensed) {
  std::vector<std::vector<int>> cells;
  for (const auto& row : licensed.cells) cells.emplace_back(row.begin(), row.end());
  return matrix_csv(cells);
}

}  // namespace jpgram
