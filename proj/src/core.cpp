#include "core.hpp"

#include <algorithm>
#include <deque>

#include "tfs/errors.hpp"

namespace tfs::detail {

SubsumeResult find_morphism(const NodeMap& qa, const std::vector<NodeId>& ra,
                            const NodeMap& qb, const std::vector<NodeId>& rb,
                            const TypeHierarchy& h) {
  SubsumeResult res;
  Morphism m;
  std::deque<NodeId> work;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    auto [it, inserted] = m.map.emplace(ra[i], rb[i]);
    if (!inserted && it->second != rb[i]) {
      res.failure = SubsumeFailure::InconsistentImage;
      res.at = ra[i];
      return res;
    }
    if (inserted) work.push_back(ra[i]);
  }
  while (!work.empty()) {
    NodeId q = work.front();
    work.pop_front();
    NodeId p = m.map.at(q);
    const NodeData& dq = qa.at(q);
    const NodeData& dp = qb.at(p);
    if (!h.subtype(dq.type, dp.type)) {
      res.failure = SubsumeFailure::TypeClash;
      res.at = q;
      return res;
    }
    for (const auto& [f, qt] : dq.arcs) {
      auto itb = dp.arcs.find(f);
      if (itb == dp.arcs.end()) {
        res.failure = SubsumeFailure::MissingArc;
        res.at = q;
        res.feature = f;
        return res;
      }
      auto [it, inserted] = m.map.emplace(qt, itb->second);
      if (!inserted) {
        if (it->second != itb->second) {
          res.failure = SubsumeFailure::InconsistentImage;
          res.at = qt;
          return res;
        }
      } else {
        work.push_back(qt);
      }
    }
  }
  res.morphism = std::move(m);
  return res;
}

bool maps_share_ids(const NodeMap& a, const NodeMap& b) {
  const NodeMap& small = a.size() <= b.size() ? a : b;
  const NodeMap& big = a.size() <= b.size() ? b : a;
  for (const auto& [id, data] : small) {
    (void)data;
    if (big.count(id)) return true;
  }
  return false;
}

namespace {

struct UnionFind {
  std::map<NodeId, NodeId> parent;
  NodeId find(NodeId x) {
    NodeId r = x;
    while (true) {
      auto it = parent.find(r);
      if (it == parent.end() || it->second == r) break;
      r = it->second;
    }
    // Path compression.
    while (x != r) {
      NodeId next = parent[x];
      parent[x] = r;
      x = next;
    }
    return r;
  }
  void link(NodeId child, NodeId root) { parent[child] = root; }
};

}  // namespace

MergedGraph merge_graphs(const NodeMap& a, const NodeMap& b,
                         const std::vector<std::pair<NodeId, NodeId>>& seeds,
                         const std::vector<NodeId>& result_roots,
                         const TypeHierarchy& h) {
  MergedGraph out;

  // Class state keyed by representative.
  std::map<NodeId, TypeId> type;
  std::map<NodeId, std::map<Feature, NodeId>> arcs;
  for (const auto& [id, data] : a) {
    type[id] = data.type;
    arcs[id] = data.arcs;
  }
  for (const auto& [id, data] : b) {
    if (type.count(id)) throw Error("unify: operand node sets overlap");
    type[id] = data.type;
    arcs[id] = data.arcs;
  }

  UnionFind uf;
  std::vector<std::pair<NodeId, NodeId>> pending(seeds);
  NodeId clash_class = 0;
  bool clashed = false;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    x = uf.find(x);
    y = uf.find(y);
    if (x == y) continue;
    uf.link(y, x);
    TypeId t = h.lub(type.at(x), type.at(y));
    if (t == kTopType) {
      clashed = true;
      clash_class = x;
      break;
    }
    type[x] = t;
    auto& ax = arcs.at(x);
    for (auto& [f, target] : arcs.at(y)) {
      auto it = ax.find(f);
      if (it == ax.end())
        ax.emplace(f, target);
      else
        pending.emplace_back(it->second, target);
    }
  }

  auto class_arcs = [&](NodeId cls) {
    std::map<Feature, NodeId> resolved;
    for (const auto& [f, target] : arcs.at(cls)) resolved[f] = uf.find(target);
    return resolved;
  };

  if (clashed) {
    // Report some path from a result root to the clash class over the
    // partially merged graph.
    std::map<NodeId, std::pair<NodeId, Feature>> pred;
    std::deque<NodeId> bfs;
    std::set<NodeId> seen;
    for (NodeId r : result_roots) {
      NodeId c = uf.find(r);
      if (seen.insert(c).second) bfs.push_back(c);
    }
    while (!bfs.empty()) {
      NodeId c = bfs.front();
      bfs.pop_front();
      if (c == clash_class) break;
      for (const auto& [f, target] : class_arcs(c)) {
        if (seen.insert(target).second) {
          pred[target] = {c, f};
          bfs.push_back(target);
        }
      }
    }
    Path p;
    NodeId cur = clash_class;
    while (pred.count(cur)) {
      p.push_back(pred.at(cur).second);
      cur = pred.at(cur).first;
    }
    std::reverse(p.begin(), p.end());
    out.ok = false;
    out.clash_path = std::move(p);
    return out;
  }

  // Rebuild the reachable part with fresh ids.
  std::deque<NodeId> bfs;
  for (NodeId r : result_roots) {
    NodeId c = uf.find(r);
    if (!out.image.count(c)) {
      out.image[c] = fresh_node();
      bfs.push_back(c);
    }
  }
  while (!bfs.empty()) {
    NodeId c = bfs.front();
    bfs.pop_front();
    NodeData nd;
    nd.type = type.at(c);
    for (const auto& [f, target] : class_arcs(c)) {
      if (!out.image.count(target)) {
        out.image[target] = fresh_node();
        bfs.push_back(target);
      }
      nd.arcs[f] = out.image.at(target);
    }
    out.nodes.emplace(out.image.at(c), std::move(nd));
  }
  // Map every old node id of the operands to its fresh image, so callers
  // can relocate roots that were not passed as result_roots.
  for (const auto& [id, data] : a) {
    (void)data;
    NodeId c = uf.find(id);
    if (out.image.count(c)) out.image[id] = out.image.at(c);
  }
  for (const auto& [id, data] : b) {
    (void)data;
    NodeId c = uf.find(id);
    if (out.image.count(c)) out.image[id] = out.image.at(c);
  }

  std::vector<NodeId> fresh_roots;
  for (NodeId r : result_roots) fresh_roots.push_back(out.image.at(uf.find(r)));
  out.cyclic = graph_cyclic(out.nodes, fresh_roots);
  out.ok = true;
  return out;
}

}  // namespace tfs::detail
