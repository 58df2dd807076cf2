#include "jpgram/core.hpp"

namespace jpgram {

const char* to_string(Pos p) {
  switch (p) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adjective: return "adjective";
    case Pos::adverb: return "adverb";
    case Pos::particle: return "particle";
    case Pos::utterance: return "utterance";
  }
  return "?";
}

const char* to_string(CaseMark c) {
  switch (c) {
    case CaseMark::none: return "none";
    case CaseMark::ga: return "ga";
    case CaseMark::wo: return "wo";
    case CaseMark::ni: return "ni";
    case CaseMark::to: return "to";
  }
  return "?";
}

const char* to_string(SemSort s) {
  switch (s) {
    case SemSort::any: return "any";
    case SemSort::temporal: return "temporal";
    case SemSort::human: return "human";
    case SemSort::situation: return "situation";
    case SemSort::place: return "place";
    case SemSort::object: return "object";
    case SemSort::event: return "event";
  }
  return "?";
}

const char* to_string(SlotRole r) {
  switch (r) {
    case SlotRole::subj: return "subj";
    case SlotRole::obj: return "obj";
    case SlotRole::iobj: return "iobj";
    case SlotRole::complement: return "compl";
  }
  return "?";
}

const char* to_string(SlotStatus s) {
  switch (s) {
    case SlotStatus::optional_arg: return "optional";
    case SlotStatus::adjacent: return "adjacent";
    case SlotStatus::saturated: return "saturated";
  }
  return "?";
}

const char* to_string(AdjunctFlavor f) {
  switch (f) {
    case AdjunctFlavor::postposition: return "postposition";
    case AdjunctFlavor::adverbial: return "adverbial";
    case AdjunctFlavor::topic_unbound: return "topic-unbound";
    case AdjunctFlavor::ga_adjunct: return "ga-adjunct";
    case AdjunctFlavor::bare_np: return "bare-np";
    case AdjunctFlavor::no_attributive: return "no-attributive";
  }
  return "?";
}

std::optional<Pos> pos_from_string(const std::string& s) {
  if (s == "noun") return Pos::noun;
  if (s == "verb") return Pos::verb;
  if (s == "adjective") return Pos::adjective;
  if (s == "adverb") return Pos::adverb;
  if (s == "particle") return Pos::particle;
  if (s == "utterance") return Pos::utterance;
  return std::nullopt;
}

std::optional<CaseMark> case_from_string(const std::string& s) {
  if (s == "none") return CaseMark::none;
  if (s == "ga") return CaseMark::ga;
  if (s == "wo") return CaseMark::wo;
  if (s == "ni") return CaseMark::ni;
  if (s == "to") return CaseMark::to;
  return std::nullopt;
}

std::optional<SemSort> sort_from_string(const std::string& s) {
  if (s == "any") return SemSort::any;
  if (s == "temporal") return SemSort::temporal;
  if (s == "human") return SemSort::human;
  if (s == "situation") return SemSort::situation;
  if (s == "place") return SemSort::place;
  if (s == "object") return SemSort::object;
  if (s == "event") return SemSort::event;
  return std::nullopt;
}

std::optional<SlotRole> role_from_string(const std::string& s) {
  if (s == "subj") return SlotRole::subj;
  if (s == "obj") return SlotRole::obj;
  if (s == "iobj") return SlotRole::iobj;
  if (s == "compl") return SlotRole::complement;
  return std::nullopt;
}

}  // namespace jpgram
