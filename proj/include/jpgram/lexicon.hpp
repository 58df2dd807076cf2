// Lexicon: tab-separated entries resolved against the type lattice, plus the
// closed class of sentence-final particles. lookup() manufactures one lexical
// sign per matching entry.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "jpgram/sign.hpp"
#include "jpgram/type_lattice.hpp"

namespace jpgram {

class LexiconError : public std::runtime_error {
 public:
  explicit LexiconError(const std::string& what) : std::runtime_error(what) {}
};

struct LexEntry {
  std::string id;       // unique; defaults to the surface
  std::string surface;
  Head head;
  SemSort sort = SemSort::any;
  std::optional<SubcatSpec> subcat;
  std::vector<ValenceSlot> valence;
};

// Sentence-final particles form a closed class handled by the parser; they
// carry no lexical grammar of their own.
const std::set<std::string>& sap_surfaces();

class Lexicon {
 public:
  // Parses the entry format: surface<TAB>pos<TAB>type-or-dash<TAB>key=value…
  // Keys: case, mod, nonaux, subcat, adjacent, sort, valence, aux, id.
  // Throws LexiconError (with line numbers) on malformed lines, unknown
  // types, duplicate ids, or entries violating the head invariants.
  static Lexicon load(const std::string& text, const TypeLattice& lattice);

  // One lexical sign per entry whose surface matches, spanning
  // [position, position+1). Unknown surfaces yield an empty list.
  std::vector<SignPtr> lookup(const std::string& surface, int position = 0) const;

  const std::vector<LexEntry>& entries() const { return entries_; }
  std::vector<const LexEntry*> entries_for(const std::string& surface) const;
  bool known(const std::string& surface) const;  // lexical or SAP

  static bool is_sap(const std::string& surface) { return sap_surfaces().count(surface) > 0; }

  // Lexical sign for a sentence-final particle token.
  static SignPtr sap_sign(const std::string& surface, int position);

 private:
  std::vector<LexEntry> entries_;
  std::map<std::string, std::vector<std::size_t>> by_surface_;
};

SignPtr lexical_sign(const LexEntry& entry, int position);

}  // namespace jpgram
