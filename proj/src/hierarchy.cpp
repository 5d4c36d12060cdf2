#include "tfs/hierarchy.hpp"

#include <algorithm>
#include <deque>

#include "tfs/errors.hpp"

namespace tfs {

TypeHierarchy TypeHierarchy::validate(const std::vector<TypeDecl>& decls) {
  TypeHierarchy h;
  h.names_.push_back("bot");
  h.by_name_["bot"] = 0;
  for (const TypeDecl& d : decls) {
    if (d.name == "bot" || d.name == "top")
      throw ParseError(0, "type '" + d.name + "' is reserved");
    if (h.by_name_.count(d.name))
      throw ParseError(0, "duplicate type declaration: " + d.name);
    h.by_name_[d.name] = static_cast<TypeId>(h.names_.size());
    h.names_.push_back(d.name);
  }
  h.decls_ = decls;

  const std::size_t n = h.names_.size();
  // children[t] = declared immediate strict subtypes of t.
  std::vector<std::vector<TypeId>> children(n);
  std::vector<unsigned> indegree(n, 0);
  for (const TypeDecl& d : decls) {
    TypeId t = h.by_name_.at(d.name);
    if (d.parents.empty()) {
      children[0].push_back(t);
      ++indegree[t];
    } else {
      for (const std::string& p : d.parents) {
        auto it = h.by_name_.find(p);
        if (it == h.by_name_.end()) throw UnknownType(p);
        if (it->second == t)
          throw CycleInHierarchy(d.name);
        children[it->second].push_back(t);
        ++indegree[t];
      }
    }
  }

  // Antisymmetry: the declared relation must be a DAG (Kahn's algorithm).
  std::deque<TypeId> ready;
  ready.push_back(0);
  std::vector<unsigned> deg = indegree;
  std::size_t emitted = 0;
  std::vector<TypeId> topo;
  while (!ready.empty()) {
    TypeId t = ready.front();
    ready.pop_front();
    topo.push_back(t);
    ++emitted;
    for (TypeId c : children[t])
      if (--deg[c] == 0) ready.push_back(c);
  }
  if (emitted != n) {
    for (TypeId t = 0; t < n; ++t)
      if (deg[t] != 0) throw CycleInHierarchy(h.names_[t]);
  }

  // Reflexive-transitive closure, in reverse topological order.
  h.leq_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    TypeId t = *it;
    h.leq_[t][t] = true;
    for (TypeId c : children[t])
      for (TypeId s = 0; s < n; ++s)
        if (h.leq_[c][s]) h.leq_[t][s] = true;
  }

  // Longest chain from bot.
  h.levels_.assign(n, 0);
  for (TypeId t : topo)
    for (TypeId c : children[t])
      h.levels_[c] = std::max(h.levels_[c], h.levels_[t] + 1);

  // Pairwise LUB table; bounded completeness fails when some up-bounded
  // pair has two incomparable minimal upper bounds.
  h.lub_.assign(n, std::vector<TypeId>(n, kTopType));
  for (TypeId a = 0; a < n; ++a) {
    for (TypeId b = a; b < n; ++b) {
      std::vector<TypeId> ubs;
      for (TypeId u = 0; u < n; ++u)
        if (h.leq_[a][u] && h.leq_[b][u]) ubs.push_back(u);
      if (ubs.empty()) continue;
      std::vector<TypeId> minimal;
      for (TypeId u : ubs) {
        bool is_min = true;
        for (TypeId v : ubs)
          if (v != u && h.leq_[v][u]) { is_min = false; break; }
        if (is_min) minimal.push_back(u);
      }
      if (minimal.size() > 1)
        throw NotBoundedComplete(h.names_[a], h.names_[b],
                                 h.names_[minimal[0]], h.names_[minimal[1]]);
      h.lub_[a][b] = h.lub_[b][a] = minimal[0];
    }
  }
  return h;
}

TypeId TypeHierarchy::check(TypeId t) const {
  if (t >= names_.size()) throw UnknownType("#" + std::to_string(t));
  return t;
}

TypeId TypeHierarchy::id(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw UnknownType(std::string(name));
  return it->second;
}

bool TypeHierarchy::declared(std::string_view name) const {
  return by_name_.count(std::string(name)) != 0;
}

const std::string& TypeHierarchy::name(TypeId t) const {
  static const std::string top = "top";
  if (t == kTopType) return top;
  return names_[check(t)];
}

bool TypeHierarchy::subtype(TypeId t1, TypeId t2) const {
  return leq_[check(t1)][check(t2)];
}

TypeId TypeHierarchy::lub(TypeId t1, TypeId t2) const {
  if (t1 == kTopType || t2 == kTopType) return kTopType;
  return lub_[check(t1)][check(t2)];
}

unsigned TypeHierarchy::level(TypeId t) const { return levels_[check(t)]; }

std::vector<TypeId> TypeHierarchy::strict_supertypes(TypeId t) const {
  check(t);
  std::vector<TypeId> out;
  for (TypeId s = 0; s < names_.size(); ++s)
    if (s != t && leq_[s][t]) out.push_back(s);
  return out;
}

std::vector<TypeId> TypeHierarchy::strict_subtypes(TypeId t) const {
  check(t);
  std::vector<TypeId> out;
  for (TypeId s = 0; s < names_.size(); ++s)
    if (s != t && leq_[t][s]) out.push_back(s);
  return out;
}

}  // namespace tfs
