#include "jpgram/lexicon.hpp"

#include <sstream>

namespace jpgram {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw LexiconError("lexicon line " + std::to_string(lineno) + ": " + msg);
}

SubcatCat parse_category(const std::string& tok, const TypeLattice& lat, int lineno) {
  if (tok == "question-clause") return SubcatCat::question();
  if (auto p = pos_from_string(tok)) {
    if (*p == Pos::particle) fail(lineno, "subcat category must name a particle type, not 'particle' the pos");
    return SubcatCat::of_pos(*p);
  }
  if (lat.has(tok)) return SubcatCat::of_type(lat.id_of(tok));
  fail(lineno, "unknown subcat category '" + tok + "'");
}

std::vector<ValenceSlot> parse_valence(const std::string& value, int lineno) {
  std::vector<ValenceSlot> slots;
  bool has_role[4] = {false, false, false, false};
  int wo_slots = 0;
  for (const auto& item : split(value, ';')) {
    if (item.empty()) continue;
    auto parts = split(item, ':');
    if (parts.size() != 4) fail(lineno, "valence slot '" + item + "' is not role:case:sort:status");
    ValenceSlot slot;
    auto role = role_from_string(parts[0]);
    if (!role) fail(lineno, "unknown valence role '" + parts[0] + "'");
    slot.role = *role;
    auto cm = case_from_string(parts[1]);
    if (!cm || *cm == CaseMark::none) fail(lineno, "invalid slot case '" + parts[1] + "'");
    slot.required_case = *cm;
    auto sort = sort_from_string(parts[2]);
    if (!sort) fail(lineno, "unknown sort '" + parts[2] + "'");
    slot.sort = *sort;
    if (parts[3] == "optional") slot.status = SlotStatus::optional_arg;
    else if (parts[3] == "adjacent") slot.status = SlotStatus::adjacent;
    else fail(lineno, "invalid slot status '" + parts[3] + "' (optional|adjacent)");
    if (has_role[static_cast<int>(slot.role)])
      fail(lineno, "duplicate valence role '" + parts[0] + "'");
    has_role[static_cast<int>(slot.role)] = true;
    if (slot.required_case == CaseMark::wo && ++wo_slots > 1)
      fail(lineno, "more than one wo-marked slot");
    slots.push_back(slot);
  }
  return slots;
}

}  // namespace

const std::set<std::string>& sap_surfaces() {
  static const std::set<std::string> saps = {"ka", "ne", "yo", "node", "ga"};
  return saps;
}

Lexicon Lexicon::load(const std::string& text, const TypeLattice& lattice) {
  Lexicon lex;
  std::set<std::string> seen_ids;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const bool has_particle_types = lattice.has("particle");
  const TypeId case_particle =
      lattice.has("case-particle") ? lattice.id_of("case-particle") : kNoType;
  const TypeId modifying_particle =
      lattice.has("modifying-particle") ? lattice.id_of("modifying-particle") : kNoType;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto fields = split(line, '\t');
    while (!fields.empty() && fields.back().find_first_not_of(" \r\n") == std::string::npos)
      fields.pop_back();
    if (fields.size() < 3) fail(lineno, "expected surface<TAB>pos<TAB>type[<TAB>attrs]");

    LexEntry e;
    e.surface = fields[0];
    if (e.surface.empty()) fail(lineno, "empty surface");
    auto pos = pos_from_string(fields[1]);
    if (!pos) fail(lineno, "unknown pos '" + fields[1] + "'");
    e.head.pos = *pos;
    if (fields[2] != "-") {
      if (!lattice.has(fields[2])) fail(lineno, "unknown particle type '" + fields[2] + "'");
      e.head.ptype = lattice.id_of(fields[2]);
    }
    e.id = e.surface;

    std::optional<SubcatSpec> subcat;
    std::vector<SemSort> complement_sorts;
    bool adjacent = true;
    bool nonaux = true;
    std::optional<Pos> mod_pos;
    std::optional<SemSort> own_sort;

    if (fields.size() >= 4) {
      std::istringstream attrs(fields[3]);
      std::string kv;
      while (attrs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail(lineno, "attribute '" + kv + "' is not key=value");
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "id") {
          e.id = value;
        } else if (key == "case") {
          auto cm = case_from_string(value);
          if (!cm) fail(lineno, "unknown case '" + value + "'");
          e.head.case_mark = *cm;
        } else if (key == "mod") {
          if (value == "noun") mod_pos = Pos::noun;
          else if (value == "verb") mod_pos = Pos::verb;
          else fail(lineno, "mod must be noun or verb");
        } else if (key == "nonaux") {
          nonaux = (value == "yes");
        } else if (key == "adjacent") {
          adjacent = (value == "yes");
        } else if (key == "aux") {
          e.head.aux = (value == "yes");
        } else if (key == "subcat") {
          SubcatSpec sc;
          for (const auto& tok : split(value, ','))
            sc.takes.push_back(parse_category(tok, lattice, lineno));
          if (sc.takes.empty()) fail(lineno, "empty subcat");
          subcat = std::move(sc);
        } else if (key == "sort") {
          if (e.head.pos == Pos::particle) {
            for (const auto& tok : split(value, ',')) {
              auto s = sort_from_string(tok);
              if (!s) fail(lineno, "unknown sort '" + tok + "'");
              complement_sorts.push_back(*s);
            }
          } else {
            auto s = sort_from_string(value);
            if (!s) fail(lineno, "unknown sort '" + value + "'");
            own_sort = *s;
          }
        } else if (key == "valence") {
          e.valence = parse_valence(value, lineno);
        } else {
          fail(lineno, "unknown attribute key '" + key + "'");
        }
      }
    }

    if (subcat) {
      subcat->adjacent = adjacent;
      subcat->complement_sorts = complement_sorts;
      e.subcat = std::move(subcat);
    }
    if (mod_pos) e.head.mod = ModTarget{*mod_pos, nonaux, SemSort::any};

    // default sorts: clause-denoting categories are situations
    if (own_sort) e.sort = *own_sort;
    else if (e.head.pos == Pos::verb || e.head.pos == Pos::adjective) e.sort = SemSort::situation;

    // invariants
    if (e.head.pos == Pos::particle) {
      if (e.head.ptype == kNoType) fail(lineno, "particle entry needs a type");
      if (!e.subcat) fail(lineno, "particle entry needs a subcat");
      if (has_particle_types && case_particle != kNoType &&
          lattice.subsumes(case_particle, e.head.ptype)) {
        if (e.head.case_mark == CaseMark::none)
          fail(lineno, "case-particle entry '" + e.id + "' needs a case");
        if (e.head.mod)
          fail(lineno, "case-particle entry '" + e.id + "' may not modify (mod must be none)");
      } else {
        if (e.head.case_mark != CaseMark::none)
          fail(lineno, "entry '" + e.id + "': case is reserved for case-particle heads");
        if (modifying_particle != kNoType &&
            lattice.subsumes(modifying_particle, e.head.ptype) && !e.head.mod)
          fail(lineno, "modifying-particle entry '" + e.id + "' needs mod");
      }
    } else {
      if (e.head.ptype != kNoType) fail(lineno, "only particles carry a particle type");
      if (e.head.case_mark != CaseMark::none) fail(lineno, "only case particles carry case");
    }
    if (!e.valence.empty() && e.head.pos != Pos::verb && e.head.pos != Pos::adjective)
      fail(lineno, "valence is restricted to verbs and adjectives");
    if (!e.valence.empty() && e.subcat) fail(lineno, "entry may have subcat or valence, not both");

    if (!seen_ids.insert(e.id).second) fail(lineno, "duplicate entry id '" + e.id + "'");
    lex.by_surface_[e.surface].push_back(lex.entries_.size());
    lex.entries_.push_back(std::move(e));
  }
  return lex;
}

std::vector<SignPtr> Lexicon::lookup(const std::string& surface, int position) const {
  std::vector<SignPtr> out;
  auto it = by_surface_.find(surface);
  if (it == by_surface_.end()) return out;
  out.reserve(it->second.size());
  for (auto idx : it->second) out.push_back(lexical_sign(entries_[idx], position));
  return out;
}

std::vector<const LexEntry*> Lexicon::entries_for(const std::string& surface) const {
  std::vector<const LexEntry*> out;
  auto it = by_surface_.find(surface);
  if (it == by_surface_.end()) return out;
  for (auto idx : it->second) out.push_back(&entries_[idx]);
  return out;
}

bool Lexicon::known(const std::string& surface) const {
  return by_surface_.count(surface) > 0 || is_sap(surface);
}

SignPtr Lexicon::sap_sign(const std::string& surface, int position) {
  auto s = std::make_shared<Sign>();
  auto head = std::make_shared<Head>();
  head->pos = Pos::particle;
  s->head = std::move(head);
  s->span = {position, position + 1};
  s->sap_token = true;
  s->entry_id = "sap:" + surface;
  s->surface = surface;
  return s;
}

SignPtr lexical_sign(const LexEntry& entry, int position) {
  auto s = std::make_shared<Sign>();
  s->head = std::make_shared<Head>(entry.head);
  s->subcat = entry.subcat;
  s->valence = entry.valence;
  s->span = {position, position + 1};
  s->sort = entry.sort;
  if (entry.head.pos == Pos::verb || entry.head.pos == Pos::adjective)
    s->pas.predicate = entry.id;
  s->entry_id = entry.id;
  s->surface = entry.surface;
  return s;
}

}  // namespace jpgram
