// Basic vocabulary shared by all modules: parts of speech, case marks,
// semantic sorts, valence roles and token spans.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace jpgram {

enum class Pos : uint8_t { noun, verb, adjective, adverb, particle, utterance };

enum class CaseMark : uint8_t { none, ga, wo, ni, to };

// Flat sort inventory. `any` is the underspecified top: a requirement of
// `any` is satisfied by every sort, all other sorts match only themselves.
enum class SemSort : uint8_t { any, temporal, human, situation, place, object, event };

// `complement` serializes as "compl" (`compl` itself is a reserved token)
enum class SlotRole : uint8_t { subj, obj, iobj, complement };

// optional: may stay unfilled; adjacent: must be filled by the immediately
// preceding sister; saturated: filled.
enum class SlotStatus : uint8_t { optional_arg, adjacent, saturated };

enum class AdjunctFlavor : uint8_t {
  postposition,
  adverbial,
  topic_unbound,
  ga_adjunct,
  bare_np,
  no_attributive,
};

// Half-open token span [start, end).
struct Span {
  int start = 0;
  int end = 0;
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// required == any accepts everything; otherwise sorts must agree exactly.
inline bool sort_satisfies(SemSort required, SemSort actual) {
  return required == SemSort::any || required == actual;
}

const char* to_string(Pos p);
const char* to_string(CaseMark c);
const char* to_string(SemSort s);
const char* to_string(SlotRole r);
const char* to_string(SlotStatus s);
const char* to_string(AdjunctFlavor f);

std::optional<Pos> pos_from_string(const std::string& s);
std::optional<CaseMark> case_from_string(const std::string& s);
std::optional<SemSort> sort_from_string(const std::string& s);
std::optional<SlotRole> role_from_string(const std::string& s);

}  // namespace jpgram
