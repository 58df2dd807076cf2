#include "jpgram/type_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace jpgram {

namespace {

constexpr const char* kBottomName = "*bottom*";

}  // namespace

TypeLattice TypeLattice::load(const std::vector<TypeDecl>& decls) {
  TypeLattice lat;
  for (const auto& d : decls) {
    if (lat.ids_.count(d.name) > 0)
      throw LatticeError("duplicate type declaration: " + d.name);
    lat.ids_.emplace(d.name, static_cast<TypeId>(lat.names_.size()));
    lat.names_.push_back(d.name);
  }
  const std::size_t n_decl = lat.names_.size();

  // parent edges
  std::vector<std::vector<TypeId>> parents(n_decl);
  for (std::size_t i = 0; i < decls.size(); ++i) {
    for (const auto& p : decls[i].parents) {
      auto it = lat.ids_.find(p);
      if (it == lat.ids_.end())
        throw LatticeError("unknown parent '" + p + "' of type '" + decls[i].name + "'");
      parents[i].push_back(it->second);
    }
  }

  // cycle check + reflexive-transitive ancestor sets, iteratively (colored DFS)
  std::vector<int> color(n_decl, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::vector<bool>> anc(n_decl, std::vector<bool>(n_decl + 1, false));
  auto visit = [&](auto&& self, TypeId t) -> void {
    if (color[t] == 1) throw LatticeError("cycle involving type '" + lat.names_[t] + "'");
    if (color[t] == 2) return;
    color[t] = 1;
    anc[t][t] = true;
    for (TypeId p : parents[t]) {
      self(self, p);
      for (std::size_t k = 0; k < n_decl; ++k)
        if (anc[p][k]) anc[t][k] = true;
    }
    color[t] = 2;
  };
  for (TypeId t = 0; t < n_decl; ++t) visit(visit, t);

  // append bottom: below everything
  lat.bottom_ = static_cast<TypeId>(n_decl);
  lat.names_.push_back(kBottomName);
  std::vector<bool> bottom_anc(n_decl + 1, true);
  anc.push_back(std::move(bottom_anc));
  lat.ancestors_ = std::move(anc);

  // GLB table over all ids (bottom included). glb(a,b) = the unique maximal
  // common descendant, or bottom when none exists.
  const std::size_t n = lat.names_.size();
  lat.meet_.assign(n * n, lat.bottom_);
  for (TypeId a = 0; a < n; ++a) {
    for (TypeId b = a; b < n; ++b) {
      TypeId m;
      if (a == lat.bottom_ || b == lat.bottom_) {
        m = lat.bottom_;
      } else if (lat.ancestors_[b][a]) {  // a above b
        m = b;
      } else if (lat.ancestors_[a][b]) {
        m = a;
      } else {
        std::vector<TypeId> common;
        for (TypeId c = 0; c < n_decl; ++c)
          if (lat.ancestors_[c][a] && lat.ancestors_[c][b]) common.push_back(c);
        // keep maximal elements (not below another common descendant)
        std::vector<TypeId> maximal;
        for (TypeId c : common) {
          bool below_other = false;
          for (TypeId d : common)
            if (d != c && lat.ancestors_[c][d]) { below_other = true; break; }
          if (!below_other) maximal.push_back(c);
        }
        if (maximal.size() > 1)
          throw LatticeError("types '" + lat.names_[a] + "' and '" + lat.names_[b] +
                             "' have multiple maximal common descendants ('" +
                             lat.names_[maximal[0]] + "', '" + lat.names_[maximal[1]] +
                             "'): hierarchy is not bounded-complete");
        m = maximal.empty() ? lat.bottom_ : maximal[0];
      }
      lat.meet_[lat.index(a, b)] = m;
      lat.meet_[lat.index(b, a)] = m;
    }
  }
  return lat;
}

TypeId TypeLattice::id_of(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw LatticeError("unknown type: " + name);
  return it->second;
}

bool TypeLattice::subsumes(TypeId general, TypeId specific) const {
  if (specific == bottom_) return true;
  if (general == bottom_) return false;
  return ancestors_[specific][general];
}

std::vector<TypeId> TypeLattice::all_types() const {
  std::vector<TypeId> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<TypeId>(i);
  return out;
}

std::vector<TypeDecl> parse_hierarchy(const std::string& text) {
  std::vector<TypeDecl> decls;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;  // blank line
    TypeDecl d;
    if (auto colon = name.find(':'); colon != std::string::npos) {
      d.name = name.substr(0, colon);
      std::string rest = name.substr(colon + 1);
      if (!rest.empty()) d.parents.push_back(rest);
    } else {
      d.name = name;
      std::string sep;
      if (ls >> sep) {
        if (sep != ":")
          throw LatticeError("hierarchy line " + std::to_string(lineno) +
                             ": expected ':' after type name");
      }
    }
    if (d.name.empty())
      throw LatticeError("hierarchy line " + std::to_string(lineno) + ": empty type name");
    std::string parent;
    while (ls >> parent) d.parents.push_back(parent);
    decls.push_back(std::move(d));
  }
  return decls;
}

}  // namespace jpgram
