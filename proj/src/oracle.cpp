#include "tfs/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "core.hpp"
#include "tfs/errors.hpp"

namespace tfs {

namespace {

// Union-find over the disjoint union of the nodes of A, B and a rule MRS,
// tagged by origin. Congruence closure is run to a fixpoint afterwards.
struct Gluer {
  enum Src { kA = 0, kB = 1, kR = 2 };

  std::vector<const NodeData*> data;
  std::vector<int> src;
  std::map<std::pair<int, NodeId>, int> index;
  std::vector<int> parent;

  void add(int s, const NodeMap& nodes) {
    for (const auto& [id, nd] : nodes) {
      index[{s, id}] = static_cast<int>(data.size());
      data.push_back(&nd);
      src.push_back(s);
      parent.push_back(static_cast<int>(parent.size()));
    }
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }

  int at(int s, NodeId id) const { return index.at({s, id}); }

  // Glues the targets of common features within each class until nothing
  // changes. Quadratic rounds are fine at oracle scale.
  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::vector<int>> classes;
      for (int e = 0; e < static_cast<int>(data.size()); ++e)
        classes[find(e)].push_back(e);
      for (const auto& [rep, members] : classes) {
        std::map<Feature, int> target;
        for (int e : members) {
          for (const auto& [f, v] : data[e]->arcs) {
            int te = at(src[e], v);
            auto [it, inserted] = target.insert({f, te});
            if (!inserted && unite(it->second, te)) changed = true;
          }
        }
      }
    }
  }
};

// Checks whether B is isomorphic to the result of rewriting element i of A
// with rule `r`: glue the context element-wise, identify the rule head with
// element i and the rule body with the replaced span, close under
// congruence, then compare the quotient against B class by class.
bool rewrite_matches(const Mrs& a, const Mrs& b, const Rule& r, std::size_t i,
                     const TypeHierarchy& h) {
  Gluer g;
  g.add(Gluer::kA, a.nodes);
  g.add(Gluer::kB, b.nodes);
  g.add(Gluer::kR, r.mrs.nodes);

  const std::size_t n = r.length();
  for (std::size_t p = 1; p < i; ++p)
    g.unite(g.at(Gluer::kA, a.roots[p - 1]), g.at(Gluer::kB, b.roots[p - 1]));
  g.unite(g.at(Gluer::kR, r.mrs.roots[0]), g.at(Gluer::kA, a.roots[i - 1]));
  for (std::size_t j = 1; j < n; ++j)
    g.unite(g.at(Gluer::kR, r.mrs.roots[j]),
            g.at(Gluer::kB, b.roots[i - 1 + j - 1]));
  for (std::size_t p = i + 1; p <= a.length(); ++p)
    g.unite(g.at(Gluer::kA, a.roots[p - 1]),
            g.at(Gluer::kB, b.roots[p + n - 2 - 1]));
  g.close();

  // Per-class summary over the A/R members (the quotient that the rewrite
  // actually produces); B members are compared against it below.
  struct ClassInfo {
    TypeId lub = 0;
    bool top = false;
    int a_or_r = 0;
    std::vector<int> b_members;
    std::set<Feature> features;
    std::set<int> targets;  // class representatives via A/R arcs
  };
  std::map<int, ClassInfo> classes;
  for (int e = 0; e < static_cast<int>(g.data.size()); ++e) {
    ClassInfo& c = classes[g.find(e)];
    if (g.src[e] == Gluer::kB) {
      c.b_members.push_back(e);
      continue;
    }
    ++c.a_or_r;
    if (!c.top) {
      c.lub = h.lub(c.lub, g.data[e]->type);
      if (c.lub == kTopType) c.top = true;
    }
    for (const auto& [f, v] : g.data[e]->arcs) {
      c.features.insert(f);
      c.targets.insert(g.find(g.at(g.src[e], v)));
    }
  }
  // A clash anywhere in the combined structure makes the rewrite undefined,
  // whether or not the clashing node survives into the result.
  for (const auto& [rep, c] : classes)
    if (c.top) return false;

  // Roots of the rewrite result: the context roots and the rule body roots.
  std::set<int> reach;
  std::deque<int> queue;
  auto enqueue = [&](int rep) {
    if (reach.insert(rep).second) queue.push_back(rep);
  };
  for (std::size_t p = 1; p <= a.length(); ++p)
    if (p != i) enqueue(g.find(g.at(Gluer::kA, a.roots[p - 1])));
  for (std::size_t j = 1; j < n; ++j)
    enqueue(g.find(g.at(Gluer::kR, r.mrs.roots[j])));
  while (!queue.empty()) {
    int rep = queue.front();
    queue.pop_front();
    for (int t : classes.at(rep).targets) enqueue(t);
  }

  // The reachable quotient must correspond one-to-one with B, preserving
  // types and feature sets; unreachable classes are dropped by the rewrite
  // and must not claim any B node.
  for (const auto& [rep, c] : classes) {
    if (reach.count(rep)) {
      if (c.b_members.size() != 1 || c.a_or_r == 0) return false;
      const NodeData& bn = *g.data[c.b_members[0]];
      if (bn.type != c.lub) return false;
      std::set<Feature> bf;
      for (const auto& [f, v] : bn.arcs) bf.insert(f);
      if (bf != c.features) return false;
    } else if (!c.b_members.empty()) {
      return false;
    }
  }
  return true;
}

// One lazy rewrite: unify a fresh copy of the rule head into element i and
// splice the instantiated body in its place. nullopt when unification fails
// or (with the occurs check) the result is cyclic.
std::optional<Mrs> rewrite(const Mrs& s, const Rule& r, std::size_t i,
                           bool occurs_check) {
  Mrs rho = rename_apart(r.mrs);
  std::vector<std::pair<NodeId, NodeId>> seeds = {
      {s.roots[i - 1], rho.roots[0]}};
  std::vector<NodeId> result_roots(s.roots.begin(), s.roots.begin() + (i - 1));
  result_roots.insert(result_roots.end(), rho.roots.begin() + 1,
                      rho.roots.end());
  result_roots.insert(result_roots.end(), s.roots.begin() + i, s.roots.end());
  detail::MergedGraph m =
      detail::merge_graphs(s.nodes, rho.nodes, seeds, result_roots, *s.hier);
  if (!m.ok) return std::nullopt;
  if (occurs_check && m.cyclic) return std::nullopt;
  Mrs out;
  out.hier = s.hier;
  out.nodes = std::move(m.nodes);
  for (NodeId root : result_roots) out.roots.push_back(m.image.at(root));
  // A context root merged into a body root would repeat; such a step yields
  // no well-formed multi-rooted structure.
  std::set<NodeId> distinct(out.roots.begin(), out.roots.end());
  if (distinct.size() != out.roots.size()) return std::nullopt;
  return out;
}

void check_hierarchies(const Grammar& g, const Mrs& a, const Mrs& b) {
  if (a.hier != g.hierarchy || b.hier != g.hierarchy)
    throw MixedHierarchies();
}

}  // namespace

std::optional<DerivationWitness> immediate_derives(const Grammar& g,
                                                   const Mrs& a,
                                                   const Mrs& b) {
  check_hierarchies(g, a, b);
  for (const Rule& r : g.rules) {
    if (b.length() + 2 != a.length() + r.length()) continue;
    for (std::size_t i = 1; i <= a.length(); ++i)
      if (rewrite_matches(a, b, r, i, *g.hierarchy))
        return DerivationWitness{r.name, i};
  }
  return std::nullopt;
}

Trit derives_bounded(const Grammar& g, const Mrs& a, const Mrs& b,
                     std::size_t depth) {
  check_hierarchies(g, a, b);

  // Rules never shrink the structure by more than one element; when none
  // shrinks it at all, anything longer than the target is dead.
  bool monotone = true;
  for (const Rule& r : g.rules)
    if (r.length() < 2) monotone = false;

  auto matches = [&](const Mrs& t) {
    return t.length() == b.length() &&
           static_cast<bool>(mrs_unify(t, b, /*occurs_check=*/true));
  };

  std::vector<Mrs> visited;
  auto seen = [&](const Mrs& t) {
    for (const Mrs& v : visited)
      if (v.length() == t.length() && mrs_variant(v, t)) return true;
    return false;
  };

  std::vector<Mrs> frontier = {a};
  visited.push_back(a);
  if (matches(a)) return Trit::Yes;
  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<Mrs> next;
    for (const Mrs& t : frontier) {
      for (const Rule& r : g.rules) {
        for (std::size_t i = 1; i <= t.length(); ++i) {
          std::optional<Mrs> u = rewrite(t, r, i, /*occurs_check=*/true);
          if (!u) continue;
          if (monotone && u->length() > b.length()) continue;
          if (seen(*u)) continue;
          if (matches(*u)) return Trit::Yes;
          visited.push_back(*u);
          next.push_back(std::move(*u));
        }
      }
    }
    if (next.empty()) return Trit::No;
    frontier = std::move(next);
  }
  return Trit::Unknown;
}

}  // namespace tfs
