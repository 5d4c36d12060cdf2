#include "tfs/feature_structure.hpp"

#include <deque>

#include "core.hpp"
#include "tfs/errors.hpp"

namespace tfs {

namespace {

void require_same_hierarchy(const HierarchyPtr& a, const HierarchyPtr& b) {
  if (a.get() != b.get()) throw MixedHierarchies();
}

// First path reaching each node, in BFS order (arcs sorted by feature).
std::map<NodeId, Path> paths_to_nodes(const Fs& a) {
  std::map<NodeId, Path> out;
  std::deque<NodeId> work;
  out[a.root] = {};
  work.push_back(a.root);
  while (!work.empty()) {
    NodeId q = work.front();
    work.pop_front();
    for (const auto& [f, target] : a.nodes.at(q).arcs) {
      if (out.count(target)) continue;
      Path p = out.at(q);
      p.push_back(f);
      out[target] = std::move(p);
      work.push_back(target);
    }
  }
  return out;
}

}  // namespace

Fs bot_fs(HierarchyPtr h) {
  Fs a;
  a.hier = std::move(h);
  a.root = fresh_node();
  a.nodes[a.root] = NodeData{a.hier->bottom(), {}};
  return a;
}

std::optional<NodeId> resolve(const Fs& a, NodeId q, const Path& p) {
  NodeId cur = q;
  for (const Feature& f : p) {
    const auto& arcs = a.nodes.at(cur).arcs;
    auto it = arcs.find(f);
    if (it == arcs.end()) return std::nullopt;
    cur = it->second;
  }
  return cur;
}

bool is_cyclic(const Fs& a) { return graph_cyclic(a.nodes, {a.root}); }

std::vector<Path> paths(const Fs& a) {
  if (is_cyclic(a)) throw CyclicStructure();
  std::vector<Path> out;
  detail::for_each_path(a.nodes, a.root,
                        [&](const Path& p, NodeId) { out.push_back(p); });
  return out;
}

SubsumeResult subsumes(const Fs& a, const Fs& b) {
  require_same_hierarchy(a.hier, b.hier);
  return detail::find_morphism(a.nodes, {a.root}, b.nodes, {b.root}, *a.hier);
}

bool variant(const Fs& a, const Fs& b) {
  return static_cast<bool>(subsumes(a, b)) && static_cast<bool>(subsumes(b, a));
}

StrictnessWitness strictness_witness(const Fs& a, const Fs& b) {
  SubsumeResult fwd = subsumes(a, b);
  if (!fwd || variant(a, b)) throw NotStrict();
  const Morphism& h = *fwd.morphism;
  std::map<NodeId, Path> reach = paths_to_nodes(a);

  // Case 1: an arc of B at an image node with no counterpart in A.
  for (const auto& [q, p] : reach) {
    const auto& arcs_a = a.nodes.at(q).arcs;
    for (const auto& [f, target] : b.nodes.at(h.map.at(q)).arcs) {
      (void)target;
      if (!arcs_a.count(f)) {
        Path witness = p;
        witness.push_back(f);
        return NewPath{std::move(witness)};
      }
    }
  }
  // Case 2: a strictly promoted type along the morphism.
  for (const auto& [q, p] : reach) {
    TypeId ta = a.nodes.at(q).type;
    TypeId tb = b.nodes.at(h.map.at(q)).type;
    if (ta != tb && a.hier->subtype(ta, tb))
      return TypePromotion{q, ta, tb, p};
  }
  // Case 3: two nodes of A share an image.
  for (auto it1 = h.map.begin(); it1 != h.map.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != h.map.end(); ++it2)
      if (it1->second == it2->second)
        return NewReentrancy{reach.at(it1->first), reach.at(it2->first)};
  throw NotStrict();
}

RankReport rank(const Fs& a) {
  if (is_cyclic(a)) throw CyclicStructure();
  RankReport r;
  detail::for_each_path(a.nodes, a.root, [&](const Path&, NodeId q) {
    ++r.path_count;
    r.theta += a.hier->level(a.nodes.at(q).type);
  });
  r.delta = r.path_count - a.nodes.size();
  r.total = r.path_count + r.theta + r.delta;
  return r;
}

UnifyResult unify(const Fs& a, const Fs& b, bool occurs_check) {
  require_same_hierarchy(a.hier, b.hier);
  UnifyResult res;
  const NodeMap* bn = &b.nodes;
  NodeId broot = b.root;
  RenamedGraph renamed;
  if (detail::maps_share_ids(a.nodes, b.nodes)) {
    // Same underlying ids (e.g. unify(A, A)); work on a fresh copy.
    renamed = copy_renamed(b.nodes, {b.root});
    bn = &renamed.nodes;
    broot = renamed.image.at(b.root);
  }
  detail::MergedGraph merged = detail::merge_graphs(
      a.nodes, *bn, {{a.root, broot}}, {a.root}, *a.hier);
  if (!merged.ok) {
    res.status = UnifyStatus::Inconsistent;
    res.clash_path = std::move(merged.clash_path);
    return res;
  }
  if (occurs_check && merged.cyclic) {
    res.status = UnifyStatus::Cycle;
    return res;
  }
  Fs value;
  value.hier = a.hier;
  value.root = merged.image.at(a.root);
  value.nodes = std::move(merged.nodes);
  res.status = UnifyStatus::Ok;
  res.value = std::move(value);
  return res;
}

Fs cyclic_chain(std::size_t i, HierarchyPtr h, const Feature& f) {
  Fs a;
  a.hier = std::move(h);
  std::vector<NodeId> ids;
  for (std::size_t k = 0; k <= i; ++k) ids.push_back(fresh_node());
  for (std::size_t k = 0; k <= i; ++k) {
    NodeData nd;
    nd.type = a.hier->bottom();
    nd.arcs[f] = (k == i) ? ids[k] : ids[k + 1];
    a.nodes.emplace(ids[k], std::move(nd));
  }
  a.root = ids[0];
  return a;
}

Fs spec_chain(std::size_t i, TypeId t, HierarchyPtr h, const Feature& f) {
  Fs a;
  a.hier = std::move(h);
  std::vector<NodeId> ids;
  for (std::size_t k = 0; k <= i; ++k) ids.push_back(fresh_node());
  for (std::size_t k = 0; k <= i; ++k) {
    NodeData nd;
    nd.type = (k < i) ? t : a.hier->bottom();
    if (k < i) nd.arcs[f] = ids[k + 1];
    a.nodes.emplace(ids[k], std::move(nd));
  }
  a.root = ids[0];
  return a;
}

}  // namespace tfs
