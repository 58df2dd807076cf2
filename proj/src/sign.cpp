#include "jpgram/sign.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace jpgram {

const Sign* Sign::head_daughter() const {
  if (std::strcmp(rule, "cmpl") == 0 || std::strcmp(rule, "adj") == 0)
    return daughters.size() == 2 ? daughters[1].get() : nullptr;
  if (std::strcmp(rule, "sap") == 0)
    return daughters.empty() ? nullptr : daughters[0].get();
  return nullptr;  // lex, npadj
}

bool complete(const Sign& s) {
  if (s.sap_token) return false;
  switch (s.head->pos) {
    case Pos::particle:
      return s.subcat && s.subcat->filled();
    case Pos::verb:
    case Pos::adjective:
      return complete_clause(s);
    default:
      return true;  // nouns (subcat optional), adverbs, utterances
  }
}

bool complete_clause(const Sign& s) {
  if (s.head->pos != Pos::verb && s.head->pos != Pos::adjective) return false;
  if (s.subcat && !s.subcat->filled()) return false;  // bare auxiliary
  for (const auto& slot : s.valence)
    if (slot.status == SlotStatus::adjacent) return false;
  return true;
}

std::string signature(const Sign& s) {
  std::ostringstream o;
  o << s.span.start << '-' << s.span.end << '|' << s.entry_id << '|'
    << to_string(s.head->pos) << '|' << s.head->ptype << '|'
    << to_string(s.head->case_mark) << '|';
  if (s.head->mod)
    o << 'm' << to_string(s.head->mod->target_pos) << (s.head->mod->nonaux_only ? "!" : "");
  o << '|' << (s.head->aux ? 'a' : '-') << '|' << to_string(s.sort) << '|'
    << (s.utterance ? 'u' : '-') << (s.question ? 'q' : '-') << (s.sap_token ? 's' : '-')
    << '|';
  if (s.subcat) o << "sc" << (s.subcat->filled() ? '+' : '-');
  o << '|';
  for (const auto& slot : s.valence) {
    o << to_string(slot.role) << ':' << to_string(slot.status);
    if (slot.filler) o << '@' << slot.filler->start << '-' << slot.filler->end;
    o << ';';
  }
  o << '|' << s.pas.predicate << '|';
  for (const auto& [role, arg] : s.pas.bound)
    o << to_string(role) << '@' << arg.span.start << '-' << arg.span.end << ':'
      << to_string(arg.sort) << ';';
  o << '|';
  auto adjuncts = s.pas.adjuncts;
  std::sort(adjuncts.begin(), adjuncts.end(), [](const auto& a, const auto& b) {
    return std::tie(a.span.start, a.span.end, a.flavor) <
           std::tie(b.span.start, b.span.end, b.flavor);
  });
  for (const auto& a : adjuncts)
    o << to_string(a.flavor) << '@' << a.span.start << '-' << a.span.end << ';';
  return o.str();
}

}  // namespace jpgram
