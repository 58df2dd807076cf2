// Particle cooccurrence: empirical adjacent-pair counts, the licensing matrix
// derived from the lexicon, and their reconciliation.
#pragma once

#include <string>
#include <vector>

#include "jpgram/lexicon.hpp"
#include "jpgram/type_lattice.hpp"

namespace jpgram {

class CoocError : public std::runtime_error {
 public:
  explicit CoocError(const std::string& what) : std::runtime_error(what) {}
};

// 14 row particles (left neighbour) x 12 column particles (right neighbour).
const std::vector<std::string>& cooc_row_labels();
const std::vector<std::string>& cooc_col_labels();

struct CoocCounts {
  std::vector<std::vector<int>> cells;  // [row][col]
  int at(const std::string& left, const std::string& right) const;
};

struct LicensingMatrix {
  std::vector<std::vector<bool>> cells;  // [row][col]
  bool at(const std::string& left, const std::string& right) const;
};

// Parses the counts CSV: header "left,ga,wo,ni,de,e,kara,made,no,wa,mo,naNka,to",
// then the 14 rows in canonical order. Throws CoocError on a malformed
// header, unknown/misplaced row label, wrong column count, or non-integer cell.
CoocCounts load_table1(const std::string& csv_text);

// cell (L, R) is true iff some entry of R subcategorizes for a category that
// a phrase headed by some entry of L satisfies (lattice subsumption of the
// phrase's head type). Ambiguous particles contribute via any of their entries.
LicensingMatrix derive_licensing(const Lexicon& lexicon, const TypeLattice& lattice);

struct PairCount {
  std::string left, right;
  int count = 0;
  friend bool operator==(const PairCount&, const PairCount&) = default;
};

using ParticlePair = std::pair<std::string, std::string>;

// The three sets partition {pairs attested >= threshold} u {licensed pairs}.
struct ReconciliationReport {
  int threshold = 0;
  std::vector<ParticlePair> licensed_and_attested;
  std::vector<PairCount> attested_unlicensed;
  std::vector<ParticlePair> licensed_unattested;
};

ReconciliationReport reconcile(const LicensingMatrix& licensed, const CoocCounts& counts,
                               int threshold);

std::string to_csv(const CoocCounts& counts);
std::string to_csv(const LicensingMatrix& licensed);

}  // namespace jpgram
