#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "jpgram/lexicon.hpp"
#include "oracles.hpp"

using jpgram::CaseMark;
using jpgram::Lexicon;
using jpgram::LexiconError;
using jpgram::Pos;
using jpgram::SemSort;
using jpgram::SlotRole;
using jpgram::SlotStatus;

namespace {

const jpgram::TypeLattice& lat() { return testutil::default_lattice(); }
const Lexicon& lex() { return testutil::default_lexicon(); }

Lexicon load_line(const std::string& line) { return Lexicon::load(line, lat()); }

}  // namespace

TEST_CASE("ambiguous particle surfaces carry the expected number of entries") {
  CHECK(lex().lookup("ga").size() == 2);   // case particle + verb-modifying adjunct
  CHECK(lex().lookup("ni").size() == 2);   // case particle + adverbial particle
  CHECK(lex().lookup("to").size() == 2);   // case/complement particle + adverbial
  CHECK(lex().lookup("wo").size() == 1);
  CHECK(lex().lookup("no").size() == 1);
  CHECK(lex().lookup("wa").size() == 1);
  CHECK(lex().lookup("mo").size() == 1);
  CHECK(lex().lookup("zzz").empty());
}

TEST_CASE("the postposition class has exactly sixteen members") {
  const auto post = lat().id_of("postposition");
  std::set<std::string> surfaces;
  for (const auto& e : lex().entries())
    if (e.head.pos == Pos::particle && e.head.ptype == post) surfaces.insert(e.surface);
  CHECK(surfaces.size() == 16);
  for (const char* s : {"e", "kara", "made", "naNka", "toshite", "toshimashite", "sonota",
                        "tomo", "soshite", "nado", "bakari", "igai", "yori", "nitsuite",
                        "nikaNshite", "nikakete"})
    CHECK(surfaces.count(s) == 1);
}

TEST_CASE("a case particle entry round-trips its attributes") {
  auto one = load_line(
      "ga\tparticle\tcase-particle\tcase=ga subcat=noun,postposition,adverbial-particle "
      "adjacent=yes\n");
  REQUIRE(one.entries().size() == 1);
  const auto& e = one.entries()[0];
  CHECK(e.id == "ga");  // defaults to the surface
  CHECK(e.head.pos == Pos::particle);
  CHECK(e.head.ptype == lat().id_of("case-particle"));
  CHECK(e.head.case_mark == CaseMark::ga);
  CHECK_FALSE(e.head.mod.has_value());
  CHECK_FALSE(e.head.aux);
  REQUIRE(e.subcat.has_value());
  CHECK(e.subcat->takes.size() == 3);
  CHECK(e.subcat->adjacent);
  CHECK_FALSE(e.subcat->filled());
  CHECK(e.valence.empty());
}

TEST_CASE("every shipped entry satisfies the head invariants") {
  const auto case_particle = lat().id_of("case-particle");
  const auto modifying = lat().id_of("modifying-particle");
  std::set<std::string> ids;
  for (const auto& e : lex().entries()) {
    CHECK(ids.insert(e.id).second);
    if (e.head.pos == Pos::particle) {
      CHECK(e.head.ptype != jpgram::kNoType);
      CHECK(e.subcat.has_value());
      CHECK(e.valence.empty());
      if (lat().subsumes(case_particle, e.head.ptype)) {
        CHECK(e.head.case_mark != CaseMark::none);
        CHECK_FALSE(e.head.mod.has_value());
      } else {
        CHECK(e.head.case_mark == CaseMark::none);
        if (lat().subsumes(modifying, e.head.ptype)) CHECK(e.head.mod.has_value());
      }
    } else {
      CHECK(e.head.ptype == jpgram::kNoType);
      CHECK(e.head.case_mark == CaseMark::none);
      if (!e.valence.empty())
        CHECK((e.head.pos == Pos::verb || e.head.pos == Pos::adjective));
      if (e.subcat) CHECK(e.valence.empty());
    }
  }
  CHECK(lex().entries().size() == 80);
}

TEST_CASE("lexical signs carry span, sort and predicate") {
  auto signs = lex().lookup("dekimasu", 3);
  REQUIRE(signs.size() == 1);
  const auto& v = *signs[0];
  CHECK(v.span == jpgram::Span{3, 4});
  CHECK(v.sort == SemSort::situation);  // verbs default to situation
  CHECK(v.pas.predicate == "dekimasu");
  REQUIRE(v.valence.size() == 2);
  CHECK(v.valence[0].role == SlotRole::subj);
  CHECK(v.valence[0].required_case == CaseMark::ga);
  CHECK(v.valence[0].sort == SemSort::human);
  CHECK(v.valence[0].status == SlotStatus::optional_arg);
  CHECK(v.valence[1].role == SlotRole::obj);
  CHECK(v.valence[1].sort == SemSort::event);

  auto noun = lex().lookup("kanojo", 0);
  REQUIRE(noun.size() == 1);
  CHECK(noun[0]->sort == SemSort::human);
  CHECK(noun[0]->pas.predicate.empty());

  auto aux = lex().lookup("omoimasu", 0);
  REQUIRE(aux.size() == 1);
  CHECK(aux[0]->valence[1].status == SlotStatus::adjacent);
}

TEST_CASE("the verb-modifying ga entry restricts its complement sorts") {
  const auto* adjunct_ga = [&]() -> const jpgram::LexEntry* {
    for (const auto* e : lex().entries_for("ga"))
      if (e->id == "ga-adjunct") return e;
    return nullptr;
  }();
  REQUIRE(adjunct_ga != nullptr);
  CHECK(adjunct_ga->head.ptype == lat().id_of("verb-modifying-particle"));
  REQUIRE(adjunct_ga->head.mod.has_value());
  CHECK(adjunct_ga->head.mod->target_pos == Pos::verb);
  CHECK(adjunct_ga->head.mod->nonaux_only);
  CHECK(adjunct_ga->head.case_mark == CaseMark::none);
  REQUIRE(adjunct_ga->subcat.has_value());
  CHECK(adjunct_ga->subcat->complement_sorts ==
        std::vector<SemSort>{SemSort::temporal, SemSort::human});
}

TEST_CASE("sentence-final particles are a closed class, not lexicon entries") {
  for (const char* s : {"ka", "ne", "yo", "node", "ga"}) CHECK(Lexicon::is_sap(s));
  CHECK_FALSE(Lexicon::is_sap("wa"));
  CHECK(lex().lookup("ka").empty());  // no lexical entry behind it
  CHECK(lex().known("ka"));
  CHECK(lex().known("ga"));
  CHECK_FALSE(lex().known("xyzzy"));

  auto sap = Lexicon::sap_sign("ka", 5);
  CHECK(sap->sap_token);
  CHECK(sap->head->pos == Pos::particle);
  CHECK(sap->span == jpgram::Span{5, 6});
  CHECK(sap->surface == "ka");
  CHECK_FALSE(jpgram::complete(*sap));
}

TEST_CASE("empty and comment-only inputs load as empty lexicons") {
  CHECK(Lexicon::load("", lat()).entries().empty());
  CHECK(Lexicon::load("# nothing here\n\n  \n", lat()).entries().empty());
}

TEST_CASE("malformed lines are rejected with their line number") {
  CHECK_THROWS_WITH_AS(load_line("ga particle\n"), doctest::Contains("line 1"),
                       LexiconError);
  CHECK_THROWS_WITH_AS(Lexicon::load("# fine\nga\tnope\t-\n", lat()),
                       doctest::Contains("line 2"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line("ga\tparticle\tghost-particle\tsubcat=noun case=ga\n"),
                       doctest::Contains("unknown particle type"), LexiconError);
}

TEST_CASE("head invariant violations are rejected") {
  // particle lacking a subcat
  CHECK_THROWS_WITH_AS(load_line("ga\tparticle\tcase-particle\tcase=ga\n"),
                       doctest::Contains("subcat"), LexiconError);
  // case particle lacking a case
  CHECK_THROWS_WITH_AS(load_line("ga\tparticle\tcase-particle\tsubcat=noun\n"),
                       doctest::Contains("needs a case"), LexiconError);
  // case particle trying to modify
  CHECK_THROWS_WITH_AS(
      load_line("ga\tparticle\tcase-particle\tcase=ga subcat=noun mod=verb\n"),
      doctest::Contains("may not modify"), LexiconError);
  // modifying particle without a mod target
  CHECK_THROWS_WITH_AS(load_line("wa\tparticle\ttopic-particle\tsubcat=noun\n"),
                       doctest::Contains("needs mod"), LexiconError);
  // non-case particle with a case
  CHECK_THROWS_WITH_AS(
      load_line("kara\tparticle\tpostposition\tmod=verb subcat=noun case=ga\n"),
      doctest::Contains("reserved for case-particle"), LexiconError);
  // non-particles with particle features
  CHECK_THROWS_AS(load_line("kanojo\tnoun\tcase-particle\n"), LexiconError);
  CHECK_THROWS_AS(load_line("kanojo\tnoun\t-\tcase=ga\n"), LexiconError);
  CHECK_THROWS_AS(load_line("gogo\tnoun\t-\tvalence=subj:ga:any:optional\n"),
                  LexiconError);
  // subcat and valence are mutually exclusive
  CHECK_THROWS_WITH_AS(
      load_line("desu\tverb\t-\tsubcat=verb valence=subj:ga:any:optional\n"),
      doctest::Contains("not both"), LexiconError);
}

TEST_CASE("duplicate ids are rejected") {
  CHECK_THROWS_WITH_AS(
      Lexicon::load("kanojo\tnoun\t-\tsort=human\nkanojo\tnoun\t-\tsort=human\n", lat()),
      doctest::Contains("duplicate entry id"), LexiconError);
  // same surface is fine when ids differ
  auto two = Lexicon::load(
      "kanojo\tnoun\t-\tsort=human\nkanojo\tnoun\t-\tid=kanojo2 sort=human\n", lat());
  CHECK(two.lookup("kanojo").size() == 2);
}

TEST_CASE("valence lists are validated") {
  auto verb = [](const std::string& v) {
    return "au\tverb\t-\tvalence=" + v + "\n";
  };
  CHECK_THROWS_WITH_AS(load_line(verb("subj:ga:human")),
                       doctest::Contains("role:case:sort:status"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line(verb("boss:ga:human:optional")),
                       doctest::Contains("unknown valence role"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line(verb("subj:none:human:optional")),
                       doctest::Contains("invalid slot case"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line(verb("subj:ga:hero:optional")),
                       doctest::Contains("unknown sort"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line(verb("subj:ga:human:sometimes")),
                       doctest::Contains("invalid slot status"), LexiconError);
  CHECK_THROWS_WITH_AS(
      load_line(verb("subj:ga:human:optional;subj:ni:any:optional")),
      doctest::Contains("duplicate valence role"), LexiconError);
  CHECK_THROWS_WITH_AS(
      load_line(verb("obj:wo:any:optional;compl:wo:any:optional")),
      doctest::Contains("more than one wo-marked slot"), LexiconError);
}

TEST_CASE("subcat categories are validated") {
  CHECK_THROWS_WITH_AS(
      load_line("mo\tparticle\ttopic-particle\tmod=verb subcat=particle\n"),
      doctest::Contains("not 'particle'"), LexiconError);
  CHECK_THROWS_WITH_AS(
      load_line("mo\tparticle\ttopic-particle\tmod=verb subcat=gizmo\n"),
      doctest::Contains("unknown subcat category"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line("mo\tparticle\ttopic-particle\tmod=verb subcat=\n"),
                       doctest::Contains("empty subcat"), LexiconError);
  // question-clause and pos and particle-type categories all parse
  auto ok = load_line(
      "mo\tparticle\ttopic-adverbial-particle\tmod=verb "
      "subcat=noun,topic-particle,question-clause\n");
  REQUIRE(ok.entries().size() == 1);
  CHECK(ok.entries()[0].subcat->takes.size() == 3);
}

TEST_CASE("unknown attribute keys and malformed pairs are rejected") {
  CHECK_THROWS_WITH_AS(load_line("kanojo\tnoun\t-\tcolour=red\n"),
                       doctest::Contains("unknown attribute key"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line("kanojo\tnoun\t-\tsort\n"),
                       doctest::Contains("not key=value"), LexiconError);
  CHECK_THROWS_WITH_AS(load_line("kanojo\tnoun\t-\tsort=hero\n"),
                       doctest::Contains("unknown sort"), LexiconError);
}

TEST_CASE("the small test grammar loads") {
  auto mini = Lexicon::load(testutil::mini_lexicon_text(), lat());
  CHECK(mini.entries().size() == 10);
  CHECK(mini.lookup("ni").size() == 2);
}
