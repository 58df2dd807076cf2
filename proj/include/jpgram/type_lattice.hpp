// Multiple-inheritance type hierarchy with a precomputed greatest-lower-bound
// table. Loading validates acyclicity and bounded completeness (every pair of
// types has at most one maximal common descendant); unification failure is the
// explicit bottom element, not an error.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace jpgram {

using TypeId = uint32_t;

struct TypeDecl {
  std::string name;
  std::vector<std::string> parents;  // empty for top types
};

class LatticeError : public std::runtime_error {
 public:
  explicit LatticeError(const std::string& what) : std::runtime_error(what) {}
};

class TypeLattice {
 public:
  // Builds the lattice from declarations. Throws LatticeError on duplicate
  // names, unknown parents, cycles, or a pair of types with two maximal
  // common descendants.
  static TypeLattice load(const std::vector<TypeDecl>& decls);

  TypeId id_of(const std::string& name) const;  // throws LatticeError if unknown
  bool has(const std::string& name) const { return ids_.count(name) > 0; }
  const std::string& name_of(TypeId t) const { return names_.at(t); }

  TypeId bottom() const { return bottom_; }
  bool is_bottom(TypeId t) const { return t == bottom_; }

  // True iff `specific` is reachable from `general` via parent links
  // (reflexive). Bottom is below every type.
  bool subsumes(TypeId general, TypeId specific) const;

  // Greatest lower bound; returns bottom when the types share no common
  // descendant.
  TypeId meet(TypeId a, TypeId b) const { return meet_.at(index(a, b)); }

  // Declared types only (excludes bottom).
  std::size_t size() const { return names_.size() - 1; }
  // All ids including bottom, in declaration order then bottom.
  std::vector<TypeId> all_types() const;

 private:
  std::size_t index(TypeId a, TypeId b) const { return a * names_.size() + b; }

  std::vector<std::string> names_;
  std::unordered_map<std::string, TypeId> ids_;
  // ancestors_[t] is the reflexive ancestor set of t as a bitmask over ids.
  std::vector<std::vector<bool>> ancestors_;
  std::vector<TypeId> meet_;
  TypeId bottom_ = 0;
};

// Parses the hierarchy text format: one "name: parent1 parent2 ..." per line,
// empty parent list for top types, '#' starts a comment. Throws LatticeError
// on malformed lines.
std::vector<TypeDecl> parse_hierarchy(const std::string& text);

}  // namespace jpgram
