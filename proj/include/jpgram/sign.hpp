// Signs: immutable feature bundles produced by the lexicon and the schemata.
// A derived sign shares its Head object with its head daughter, so the
// head-feature principle is checkable by pointer identity.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jpgram/core.hpp"
#include "jpgram/type_lattice.hpp"

namespace jpgram {

inline constexpr TypeId kNoType = static_cast<TypeId>(-1);

// What a modifier attaches to. target_pos verb covers predicative heads
// (verbs and adjectives); noun covers nominal heads.
struct ModTarget {
  Pos target_pos = Pos::verb;
  bool nonaux_only = true;
  SemSort target_sort = SemSort::any;
};

// Head features. SPEC is uniformly none in this grammar and therefore not
// represented. case_mark is none unless ptype is under case-particle; mod is
// none (nullopt) for all case-particle heads.
struct Head {
  Pos pos = Pos::noun;
  TypeId ptype = kNoType;  // particles only
  CaseMark case_mark = CaseMark::none;
  std::optional<ModTarget> mod;
  bool aux = false;
};

struct ValenceSlot {
  SlotRole role = SlotRole::subj;
  CaseMark required_case = CaseMark::ga;
  SemSort sort = SemSort::any;
  SlotStatus status = SlotStatus::optional_arg;
  std::optional<Span> filler;  // saturated iff set
};

// One category constraint of a subcat list: either a part of speech, the
// question-clause pseudo-category, or a particle type from the lattice.
struct SubcatCat {
  enum class Kind : uint8_t { pos, question_clause, particle_type };
  Kind kind = Kind::pos;
  Pos pos = Pos::noun;
  TypeId type = kNoType;

  static SubcatCat of_pos(Pos p) { return {Kind::pos, p, kNoType}; }
  static SubcatCat question() { return {Kind::question_clause, Pos::utterance, kNoType}; }
  static SubcatCat of_type(TypeId t) { return {Kind::particle_type, Pos::particle, t}; }
};

struct SubcatSpec {
  std::vector<SubcatCat> takes;              // non-empty
  bool adjacent = true;                      // complement must be string-adjacent
  std::vector<SemSort> complement_sorts;     // empty = unrestricted
  std::optional<Span> filler;                // saturated iff set
  bool filled() const { return filler.has_value(); }
};

struct BoundArg {
  Span span;
  SemSort sort = SemSort::any;
  friend bool operator==(const BoundArg&, const BoundArg&) = default;
};

struct AdjunctRecord {
  Span span;
  AdjunctFlavor flavor = AdjunctFlavor::adverbial;
  friend bool operator==(const AdjunctRecord&, const AdjunctRecord&) = default;
};

// Predicate-argument structure carried by every sign.
struct PredArgStructure {
  std::string predicate;  // lexical entry id of the predicate, empty if none
  std::map<SlotRole, BoundArg> bound;
  std::vector<AdjunctRecord> adjuncts;
};

struct Sign;
using SignPtr = std::shared_ptr<const Sign>;

struct Sign {
  std::shared_ptr<const Head> head;
  std::optional<SubcatSpec> subcat;   // particles, subcat nouns, subcat auxiliaries
  std::vector<ValenceSlot> valence;   // verbs and adjectives
  Span span;
  SemSort sort = SemSort::any;
  PredArgStructure pas;
  bool utterance = false;             // built by the SAP schema
  bool question = false;              // utterance carrying the question SAP
  bool sap_token = false;             // lexical sentence-final-particle token
  std::string entry_id;               // id of the lexical head entry
  std::string surface;                // lexical surface (leaves only)
  const char* rule = "lex";           // lex | cmpl | adj | npadj | sap
  std::vector<SignPtr> daughters;     // binary: [non-head, head] except sap: [head, sap]

  const Sign* head_daughter() const;  // nullptr for lexical and bare-np signs
};

// True when the sign can serve as a complement or adjunct: particles must be
// saturated, predicates must have no unfilled adjacent slot, an auxiliary's
// subcat must be filled. Nouns with an optional subcat count as complete.
bool complete(const Sign& s);

// True for verb/adjective signs with no unfilled adjacent valence slot and a
// filled subcat (if any) — the shape the SAP schema and clause-level analyses
// require.
bool complete_clause(const Sign& s);

// Canonical signature used for chart deduplication and derivation
// equivalence. Two signs with equal signatures license exactly the same
// continuations and describe the same predicate-argument structure.
std::string signature(const Sign& s);

}  // namespace jpgram
