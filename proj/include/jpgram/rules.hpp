// The four composition schemata. Composition is strictly binary and
// head-final except for the unary bare-NP promotion. Every schema result
// shares its Head with the head daughter (head-feature principle); saturation
// only ever grows.
#pragma once

#include <optional>
#include <vector>

#include "jpgram/sign.hpp"
#include "jpgram/type_lattice.hpp"

namespace jpgram {

enum class FailReason : uint8_t {
  case_clash,
  sort_clash,
  already_saturated,
  adjacency_violation,
  mod_none,
  target_pos_clash,
  aux_clash,
  category_clash,
  incomplete,
};

const char* to_string(FailReason r);

// A schema application either yields signs (several when more than one
// valence slot accepts the complement), or a diagnosable failure reason, or
// neither when the configuration is simply not an instance of the schema.
struct RuleOutcome {
  std::vector<SignPtr> signs;
  std::optional<FailReason> failure;
  bool applied() const { return !signs.empty(); }
};

// Complement-Head: complement precedes head. Covers (a) subcat-bearing heads
// (particles, complement-taking nouns, auxiliaries) and (b) valence-bearing
// predicates saturating a case-marked phrase.
RuleOutcome complement_head(const TypeLattice& lattice, const SignPtr& complement,
                            const SignPtr& head);

// Adjunct-Head: a modifier (saturated modifying-particle phrase, bare-NP
// copy, adverb, or attributive adjective) precedes the head it modifies.
RuleOutcome adjunct_head(const TypeLattice& lattice, const SignPtr& adjunct,
                         const SignPtr& head);

// Unary promotion of a particleless NP to a predicate modifier. The original
// sign stays available; the copy carries mod = nonauxiliary verb.
std::optional<SignPtr> bare_np_adjunct(const SignPtr& np);

// Sentence-final particle attachment: complete clause (or utterance, for
// repeated SAPs) + SAP token -> utterance.
RuleOutcome sap_attach(const SignPtr& clause, const SignPtr& sap);

// Pas flavor under which a given adjunct sign is recorded.
AdjunctFlavor adjunct_flavor(const TypeLattice& lattice, const Sign& adjunct);

}  // namespace jpgram
