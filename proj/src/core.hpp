#pragma once

// Internal graph-level machinery shared by the TFS and MRS front ends.

#include <utility>

#include "tfs/feature_structure.hpp"

namespace tfs::detail {

// Deterministic BFS morphism construction seeded with the given root
// pairs (subsumer node, subsumee node).
SubsumeResult find_morphism(const NodeMap& qa, const std::vector<NodeId>& ra,
                            const NodeMap& qb, const std::vector<NodeId>& rb,
                            const TypeHierarchy& h);

struct MergedGraph {
  bool ok = false;
  bool cyclic = false;
  Path clash_path;                  // when !ok: a path typing to top
  NodeMap nodes;                    // fresh ids, reachable part only
  std::map<NodeId, NodeId> image;   // old id -> fresh id (reachable classes)
};

// Congruence closure over the disjoint union of `a` and `b`, seeded with
// the given node pairs; merged classes are typed by lub. The result is
// rebuilt with fresh ids from `result_roots` (old ids from either side).
// Operand node sets must be disjoint.
MergedGraph merge_graphs(const NodeMap& a, const NodeMap& b,
                         const std::vector<std::pair<NodeId, NodeId>>& seeds,
                         const std::vector<NodeId>& result_roots,
                         const TypeHierarchy& h);

// True when the two maps have any key in common.
bool maps_share_ids(const NodeMap& a, const NodeMap& b);

// All paths from `root`, assuming acyclicity (the caller checks).
// Invokes fn(path, endpoint) for every path including the empty one.
template <typename Fn>
void for_each_path(const NodeMap& nodes, NodeId root, Fn&& fn) {
  Path prefix;
  // Explicit stack of (node, arc iterator) to avoid deep recursion.
  struct Frame {
    NodeId node;
    std::map<Feature, NodeId>::const_iterator it, end;
  };
  fn(prefix, root);
  std::vector<Frame> stack;
  const auto& rd = nodes.at(root);
  stack.push_back({root, rd.arcs.begin(), rd.arcs.end()});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.it == top.end) {
      stack.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    const Feature& f = top.it->first;
    NodeId next = top.it->second;
    ++top.it;
    prefix.push_back(f);
    fn(prefix, next);
    const auto& nd = nodes.at(next);
    stack.push_back({next, nd.arcs.begin(), nd.arcs.end()});
  }
}

}  // namespace tfs::detail
