#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>

#include "jpgram/chart_parser.hpp"
#include "jpgram/cooc.hpp"
#include "oracles.hpp"

using jpgram::CoocCounts;
using jpgram::CoocError;
using jpgram::load_table1;
using jpgram::ParticlePair;

namespace {

const CoocCounts& counts() {
  static const CoocCounts c = load_table1(testutil::slurp(testutil::data_path("table1.csv")));
  return c;
}

const jpgram::LicensingMatrix& licensing() {
  static const jpgram::LicensingMatrix m =
      jpgram::derive_licensing(testutil::default_lexicon(), testutil::default_lattice());
  return m;
}

// Independent check of one licensing cell: parse "gogo L R" and look for a
// saturated particle phrase covering all three tokens.
bool fragment_parses(const std::string& left, const std::string& right) {
  static const jpgram::Parser parser(testutil::default_lexicon(), testutil::default_lattice());
  auto chart = parser.chart({"gogo", left, right});
  for (const auto& e : chart.cell(0, 3))
    if (e->head->pos == jpgram::Pos::particle && jpgram::complete(*e)) return true;
  return false;
}

}  // namespace

TEST_CASE("row and column label orders are fixed") {
  CHECK(jpgram::cooc_row_labels() ==
        std::vector<std::string>{"ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa",
                                 "mo", "naNka", "to", "toshite", "toshimashite"});
  CHECK(jpgram::cooc_col_labels() ==
        std::vector<std::string>{"ga", "wo", "ni", "de", "e", "kara", "made", "no", "wa",
                                 "mo", "naNka", "to"});
}

TEST_CASE("the shipped counts table carries the expected landmark cells") {
  CHECK(counts().at("no", "de") == 2249);
  CHECK(counts().at("de", "mo") == 241);
  CHECK(counts().at("ni", "wa") == 137);
  CHECK(counts().at("kara", "to") == 123);
  CHECK(counts().at("made", "ni") == 66);
  CHECK(counts().at("de", "ga") == 2);
  CHECK(counts().at("wa", "naNka") == 1);
  CHECK(counts().at("toshimashite", "wa") == 15);

  for (const auto& col : jpgram::cooc_col_labels()) {
    CHECK(counts().at("ga", col) == 0);  // nothing follows a case-marked ga
    CHECK(counts().at("mo", col) == 0);
    CHECK(counts().at(col, col) == 0);  // no particle doubles itself
  }
}

TEST_CASE("counts parsing validates shape and content") {
  CHECK_THROWS_AS(load_table1(""), CoocError);
  CHECK_THROWS_WITH_AS(load_table1("left,ga,wo\nga,0,0\n"),
                       doctest::Contains("malformed counts header"), CoocError);

  auto csv = testutil::slurp(testutil::data_path("table1.csv"));

  auto drop_last_row = csv.substr(0, csv.rfind("toshimashite"));
  CHECK_THROWS_WITH_AS(load_table1(drop_last_row), doctest::Contains("14"), CoocError);

  auto swapped = csv;
  auto wo_pos = swapped.find("\nwo,");
  auto ni_pos = swapped.find("\nni,");
  REQUIRE(wo_pos != std::string::npos);
  REQUIRE(ni_pos != std::string::npos);
  swapped.replace(ni_pos, 4, "\nXX,");
  swapped.replace(wo_pos, 4, "\nni,");
  swapped.replace(swapped.find("\nXX,"), 4, "\nwo,");
  CHECK_THROWS_WITH_AS(load_table1(swapped), doctest::Contains("misplaced"), CoocError);

  auto short_row = csv;
  short_row.replace(short_row.find("mo,0,0,0,0,0,0,0,0,0,0,0,0"), 26,
                    "mo,0,0,0,0,0,0,0,0,0,0,0");
  CHECK_THROWS_WITH_AS(load_table1(short_row), doctest::Contains("cells"), CoocError);

  auto garbled = csv;
  garbled.replace(garbled.find("2249"), 4, "22x9");
  CHECK_THROWS_WITH_AS(load_table1(garbled), doctest::Contains("non-integer"), CoocError);

  auto negative = csv;
  negative.replace(negative.find("2249"), 4, "-249");
  CHECK_THROWS_AS(load_table1(negative), CoocError);
}

TEST_CASE("counts survive a csv round trip") {
  auto reloaded = load_table1(jpgram::to_csv(counts()));
  CHECK(reloaded.cells == counts().cells);
}

TEST_CASE("derived licensing reflects the lexicon's subcategorization") {
  const auto& m = licensing();
  // postposition phrases feed case particles and topic particles
  CHECK(m.at("kara", "ga"));
  CHECK(m.at("kara", "wa"));
  CHECK(m.at("toshimashite", "wa"));
  CHECK(m.at("naNka", "mo"));
  // adverbial phrases feed case, topic and mo
  CHECK(m.at("ni", "wa"));
  CHECK(m.at("de", "mo"));
  CHECK(m.at("to", "no"));
  // topic phrases feed only no and mo
  CHECK(m.at("wa", "no"));
  CHECK(m.at("wa", "mo"));
  CHECK_FALSE(m.at("wa", "ga"));
  // nothing subcategorizes for case particles or bare verb-modifying ga
  for (const auto& col : jpgram::cooc_col_labels()) {
    CHECK_FALSE(m.at("ga", col));
    CHECK_FALSE(m.at("no", col));
  }
  // de takes only nouns and postpositions, so adverbial ni cannot precede it
  CHECK_FALSE(m.at("ni", "de"));
  // nothing feeds the noun-only postpositions
  for (const auto& row : jpgram::cooc_row_labels()) {
    CHECK_FALSE(m.at(row, "e"));
    CHECK_FALSE(m.at(row, "kara"));
    CHECK_FALSE(m.at(row, "made"));
    CHECK_FALSE(m.at(row, "naNka"));
  }
}

TEST_CASE("every licensing cell agrees with an actual three-token parse") {
  const auto& m = licensing();
  const auto& rows = jpgram::cooc_row_labels();
  const auto& cols = jpgram::cooc_col_labels();
  for (const auto& left : rows) {
    for (const auto& right : cols) {
      INFO("pair (" << left << ", " << right << ")");
      CHECK(m.at(left, right) == fragment_parses(left, right));
    }
  }
}

TEST_CASE("reconciliation at threshold ten isolates five unlicensed pairs") {
  auto report = jpgram::reconcile(licensing(), counts(), 10);
  CHECK(report.threshold == 10);

  std::vector<jpgram::PairCount> expected = {{"ni", "de", 19},
                                             {"no", "ga", 64},
                                             {"no", "de", 2249},
                                             {"no", "wa", 287},
                                             {"no", "mo", 11}};
  CHECK(report.attested_unlicensed == expected);

  CHECK(report.licensed_and_attested.size() == 27);
  CHECK(report.licensed_unattested.size() == 51);

  auto contains = [](const std::vector<ParticlePair>& v, const char* l, const char* r) {
    return std::find(v.begin(), v.end(), ParticlePair{l, r}) != v.end();
  };
  CHECK(contains(report.licensed_and_attested, "kara", "to"));
  CHECK(contains(report.licensed_and_attested, "de", "mo"));
  CHECK(contains(report.licensed_and_attested, "made", "ni"));
  CHECK(contains(report.licensed_and_attested, "naNka", "wa"));
  CHECK(contains(report.licensed_and_attested, "toshimashite", "wa"));
  CHECK(contains(report.licensed_unattested, "mo", "ga"));
  CHECK(contains(report.licensed_unattested, "wa", "mo"));
}

TEST_CASE("the three reconciliation sets partition licensed-or-attested pairs") {
  for (int threshold : {0, 1, 5, 10, 50, 200, 3000}) {
    auto report = jpgram::reconcile(licensing(), counts(), threshold);
    std::size_t cells_accounted = 0;
    for (const auto& left : jpgram::cooc_row_labels()) {
      for (const auto& right : jpgram::cooc_col_labels()) {
        const bool lic = licensing().at(left, right);
        const bool att = counts().at(left, right) >= threshold;
        const bool in_la = std::find(report.licensed_and_attested.begin(),
                                     report.licensed_and_attested.end(),
                                     ParticlePair{left, right}) !=
                           report.licensed_and_attested.end();
        const bool in_au =
            std::any_of(report.attested_unlicensed.begin(), report.attested_unlicensed.end(),
                        [&](const jpgram::PairCount& p) {
                          return p.left == left && p.right == right;
                        });
        const bool in_lu = std::find(report.licensed_unattested.begin(),
                                     report.licensed_unattested.end(),
                                     ParticlePair{left, right}) !=
                           report.licensed_unattested.end();
        CHECK(in_la == (lic && att));
        CHECK(in_au == (att && !lic));
        CHECK(in_lu == (lic && !att));
        cells_accounted += in_la + in_au + in_lu;
      }
    }
    CHECK(cells_accounted == report.licensed_and_attested.size() +
                                 report.attested_unlicensed.size() +
                                 report.licensed_unattested.size());
  }
}

TEST_CASE("raising the threshold only shrinks the attested sets") {
  std::size_t prev_attested = std::numeric_limits<std::size_t>::max();
  for (int threshold : {1, 5, 10, 20, 100, 300, 2500}) {
    auto report = jpgram::reconcile(licensing(), counts(), threshold);
    std::size_t attested =
        report.licensed_and_attested.size() + report.attested_unlicensed.size();
    CHECK(attested <= prev_attested);
    prev_attested = attested;
  }
  // beyond the largest count nothing is attested and every licensed pair idles
  auto top = jpgram::reconcile(licensing(), counts(), 2250);
  CHECK(top.licensed_and_attested.empty());
  CHECK(top.attested_unlicensed.empty());
  CHECK(top.licensed_unattested.size() == 78);
}

TEST_CASE("licensing csv uses the shared header and 0/1 cells") {
  auto csv = jpgram::to_csv(licensing());
  CHECK(csv.rfind("left,ga,wo,ni,de,e,kara,made,no,wa,mo,naNka,to\n", 0) == 0);
  CHECK(csv.find("kara,1,1,1,1,0,0,0,1,1,1,0,1\n") != std::string::npos);
  CHECK(csv.find("ga,0,0,0,0,0,0,0,0,0,0,0,0\n") != std::string::npos);
}
