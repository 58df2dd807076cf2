#include "jpgram/rules.hpp"

#include <algorithm>

namespace jpgram {

namespace {

bool sort_listed(const std::vector<SemSort>& allowed, SemSort s) {
  return allowed.empty() || std::find(allowed.begin(), allowed.end(), s) != allowed.end();
}

bool plain(const Sign& s) {  // not promoted, not an utterance, not a SAP token
  return !s.head->mod && !s.utterance && !s.sap_token;
}

bool category_matches(const TypeLattice& lat, const SubcatCat& cat, const Sign& c) {
  switch (cat.kind) {
    case SubcatCat::Kind::question_clause:
      return c.utterance && c.question;
    case SubcatCat::Kind::particle_type:
      return c.head->pos == Pos::particle && !c.sap_token && complete(c) &&
             lat.subsumes(cat.type, c.head->ptype);
    case SubcatCat::Kind::pos:
      switch (cat.pos) {
        case Pos::utterance:
          return c.utterance;
        case Pos::noun:
          return c.head->pos == Pos::noun && plain(c);
        case Pos::verb:
          return c.head->pos == Pos::verb && plain(c) && complete_clause(c);
        case Pos::adjective:
          return c.head->pos == Pos::adjective && plain(c) && complete(c);
        default:
          return false;
      }
  }
  return false;
}

// head daughter is an unsaturated subcat bearer (particle, noun, auxiliary)
RuleOutcome fill_subcat(const TypeLattice& lat, const SignPtr& c, const SignPtr& h) {
  RuleOutcome out;
  const SubcatSpec& sc = *h->subcat;
  if (sc.filled()) {
    out.failure = FailReason::already_saturated;
    return out;
  }
  bool cat_ok = false;
  for (const auto& cat : sc.takes)
    if (category_matches(lat, cat, *c)) { cat_ok = true; break; }
  if (!cat_ok) {
    out.failure = FailReason::category_clash;
    return out;
  }
  if (!sort_listed(sc.complement_sorts, c->sort)) {
    out.failure = FailReason::sort_clash;
    return out;
  }

  auto r = std::make_shared<Sign>();
  r->head = h->head;
  r->subcat = sc;
  r->subcat->filler = c->span;
  r->valence = h->valence;
  r->span = {c->span.start, h->span.end};
  const bool transparent = h->head->pos == Pos::particle || h->head->aux;
  r->sort = h->head->pos == Pos::particle ? c->sort : h->sort;
  r->pas = transparent ? c->pas : h->pas;
  r->entry_id = h->entry_id;
  r->rule = "cmpl";
  r->daughters = {c, h};
  out.signs.push_back(std::move(r));
  return out;
}

// head daughter is a predicate with valence slots
RuleOutcome fill_valence(const SignPtr& c, const SignPtr& h) {
  RuleOutcome out;
  if (c->head->case_mark == CaseMark::none) return out;  // not an argument phrase
  if (!complete(*c)) {
    out.failure = FailReason::incomplete;
    return out;
  }
  bool case_seen = false, case_unfilled = false, sort_ok_seen = false;
  for (std::size_t i = 0; i < h->valence.size(); ++i) {
    const ValenceSlot& slot = h->valence[i];
    if (slot.required_case != c->head->case_mark) continue;
    case_seen = true;
    if (slot.status == SlotStatus::saturated) continue;
    case_unfilled = true;
    if (!sort_satisfies(slot.sort, c->sort)) continue;
    sort_ok_seen = true;
    // adjacency blocks skipping: no other unfilled adjacent slot may remain
    bool blocked = false;
    for (std::size_t j = 0; j < h->valence.size(); ++j)
      if (j != i && h->valence[j].status == SlotStatus::adjacent) { blocked = true; break; }
    if (blocked) {
      out.failure = FailReason::adjacency_violation;
      continue;
    }
    auto r = std::make_shared<Sign>();
    r->head = h->head;
    r->subcat = h->subcat;
    r->valence = h->valence;
    r->valence[i].status = SlotStatus::saturated;
    r->valence[i].filler = c->span;
    r->span = {c->span.start, h->span.end};
    r->sort = h->sort;
    r->pas = h->pas;
    r->pas.bound[slot.role] = BoundArg{c->span, c->sort};
    r->entry_id = h->entry_id;
    r->rule = "cmpl";
    r->daughters = {c, h};
    out.signs.push_back(std::move(r));
  }
  if (!out.signs.empty()) {
    out.failure.reset();
    return out;
  }
  if (!out.failure) {
    if (!case_seen) out.failure = FailReason::case_clash;
    else if (!case_unfilled) out.failure = FailReason::already_saturated;
    else if (!sort_ok_seen) out.failure = FailReason::sort_clash;
  }
  return out;
}

}  // namespace

const char* to_string(FailReason r) {
  switch (r) {
    case FailReason::case_clash: return "case-clash";
    case FailReason::sort_clash: return "sort-clash";
    case FailReason::already_saturated: return "already-saturated";
    case FailReason::adjacency_violation: return "adjacency-violation";
    case FailReason::mod_none: return "mod-none";
    case FailReason::target_pos_clash: return "target-pos-clash";
    case FailReason::aux_clash: return "aux-clash";
    case FailReason::category_clash: return "category-clash";
    case FailReason::incomplete: return "incomplete";
  }
  return "?";
}

RuleOutcome complement_head(const TypeLattice& lat, const SignPtr& c, const SignPtr& h) {
  RuleOutcome out;
  if (c->sap_token || h->sap_token || h->utterance) return out;
  if (h->subcat) return fill_subcat(lat, c, h);
  if ((h->head->pos == Pos::verb || h->head->pos == Pos::adjective) && !h->valence.empty())
    return fill_valence(c, h);
  return out;
}

RuleOutcome adjunct_head(const TypeLattice& lat, const SignPtr& a, const SignPtr& h) {
  RuleOutcome out;
  if (a->sap_token || h->sap_token || a->utterance || h->utterance) return out;
  if (!a->head->mod) {
    // the interesting near-miss: a saturated case-particle phrase sitting
    // next to a potential target it may never modify
    if (a->head->pos == Pos::particle && complete(*a) &&
        (h->head->pos == Pos::verb || h->head->pos == Pos::adjective))
      out.failure = FailReason::mod_none;
    return out;
  }
  if (!complete(*a)) {
    out.failure = FailReason::incomplete;
    return out;
  }
  const ModTarget& mod = *a->head->mod;
  const bool pos_ok = mod.target_pos == Pos::noun
                          ? h->head->pos == Pos::noun
                          : h->head->pos == Pos::verb || h->head->pos == Pos::adjective;
  if (!pos_ok) {
    out.failure = FailReason::target_pos_clash;
    return out;
  }
  if (mod.nonaux_only && h->head->aux) {
    out.failure = FailReason::aux_clash;
    return out;
  }
  if (!sort_satisfies(mod.target_sort, h->sort)) {
    out.failure = FailReason::sort_clash;
    return out;
  }
  // an unfilled obligatory complement keeps the head closed to modifiers
  for (const auto& slot : h->valence)
    if (slot.status == SlotStatus::adjacent) {
      out.failure = FailReason::adjacency_violation;
      return out;
    }
  if (h->head->pos == Pos::verb && h->subcat && !h->subcat->filled()) {
    out.failure = FailReason::adjacency_violation;
    return out;
  }

  const AdjunctFlavor flavor = adjunct_flavor(lat, *a);
  auto r = std::make_shared<Sign>();
  r->head = h->head;
  r->subcat = h->subcat;
  r->valence = h->valence;
  r->span = {a->span.start, h->span.end};
  // attributive no-phrases refine an underspecified nominal sort
  r->sort = (flavor == AdjunctFlavor::no_attributive && h->sort == SemSort::any)
                ? a->sort
                : h->sort;
  r->pas = h->pas;
  r->pas.adjuncts.push_back({a->span, flavor});
  r->entry_id = h->entry_id;
  r->rule = "adj";
  r->daughters = {a, h};
  out.signs.push_back(std::move(r));
  return out;
}

std::optional<SignPtr> bare_np_adjunct(const SignPtr& np) {
  if (np->head->pos != Pos::noun || np->head->mod || np->sap_token || np->utterance)
    return std::nullopt;
  auto head = std::make_shared<Head>(*np->head);
  head->mod = ModTarget{Pos::verb, /*nonaux_only=*/true, SemSort::any};
  auto r = std::make_shared<Sign>(*np);
  r->head = std::move(head);
  r->rule = "npadj";
  r->daughters = {np};
  return SignPtr(std::move(r));
}

RuleOutcome sap_attach(const SignPtr& clause, const SignPtr& sap) {
  RuleOutcome out;
  if (!sap->sap_token || clause->sap_token) return out;
  if (!clause->utterance && !complete_clause(*clause)) {
    if (clause->head->pos == Pos::verb || clause->head->pos == Pos::adjective)
      out.failure = FailReason::incomplete;
    return out;
  }
  auto r = std::make_shared<Sign>();
  r->head = clause->head;
  r->subcat = clause->subcat;
  r->valence = clause->valence;
  r->span = {clause->span.start, sap->span.end};
  r->sort = clause->sort;
  r->pas = clause->pas;
  r->utterance = true;
  r->question = clause->question || sap->surface == "ka";
  r->entry_id = clause->entry_id;
  r->rule = "sap";
  r->daughters = {clause, sap};
  out.signs.push_back(std::move(r));
  return out;
}

AdjunctFlavor adjunct_flavor(const TypeLattice& lat, const Sign& a) {
  switch (a.head->pos) {
    case Pos::noun: return AdjunctFlavor::bare_np;
    case Pos::adverb: return AdjunctFlavor::adverbial;
    case Pos::adjective: return AdjunctFlavor::no_attributive;
    default: break;
  }
  auto under = [&](const char* name) {
    return lat.has(name) && lat.subsumes(lat.id_of(name), a.head->ptype);
  };
  if (under("topic-particle")) return AdjunctFlavor::topic_unbound;
  if (under("postposition")) return AdjunctFlavor::postposition;
  if (under("adverbial-particle")) return AdjunctFlavor::adverbial;
  if (under("noun-modifying-particle")) return AdjunctFlavor::no_attributive;
  return AdjunctFlavor::ga_adjunct;  // the verb-modifying ga entry
}

}  // namespace jpgram
