#include "tfs/node_graph.hpp"

#include <atomic>
#include <deque>

namespace tfs {

NodeId fresh_node() {
  static std::atomic<NodeId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::string path_to_string(const Path& p) {
  if (p.empty()) return "<>";
  std::string out = "<";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += p[i];
  }
  out += ">";
  return out;
}

std::set<NodeId> reachable_nodes(const NodeMap& nodes,
                                 const std::vector<NodeId>& roots) {
  std::set<NodeId> seen;
  std::deque<NodeId> work(roots.begin(), roots.end());
  while (!work.empty()) {
    NodeId q = work.front();
    work.pop_front();
    if (!seen.insert(q).second) continue;
    auto it = nodes.find(q);
    if (it == nodes.end()) continue;
    for (const auto& [f, target] : it->second.arcs) work.push_back(target);
  }
  return seen;
}

bool graph_cyclic(const NodeMap& nodes, const std::vector<NodeId>& roots) {
  enum Color : unsigned char { White, Grey, Black };
  std::map<NodeId, Color> color;
  // Iterative DFS; frame holds the arc iterator position.
  struct Frame {
    NodeId node;
    std::map<Feature, NodeId>::const_iterator it, end;
  };
  for (NodeId root : roots) {
    if (color[root] != White) continue;
    std::vector<Frame> stack;
    auto& rd = nodes.at(root);
    color[root] = Grey;
    stack.push_back({root, rd.arcs.begin(), rd.arcs.end()});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.it == top.end) {
        color[top.node] = Black;
        stack.pop_back();
        continue;
      }
      NodeId next = top.it->second;
      ++top.it;
      Color c = color[next];
      if (c == Grey) return true;
      if (c == White) {
        color[next] = Grey;
        auto& nd = nodes.at(next);
        stack.push_back({next, nd.arcs.begin(), nd.arcs.end()});
      }
    }
  }
  return false;
}

RenamedGraph copy_renamed(const NodeMap& nodes,
                          const std::vector<NodeId>& roots) {
  RenamedGraph out;
  std::set<NodeId> keep = reachable_nodes(nodes, roots);
  for (NodeId q : keep) out.image[q] = fresh_node();
  for (NodeId q : keep) {
    const NodeData& src = nodes.at(q);
    NodeData copy;
    copy.type = src.type;
    for (const auto& [f, target] : src.arcs) copy.arcs[f] = out.image.at(target);
    out.nodes.emplace(out.image.at(q), std::move(copy));
  }
  return out;
}

}  // namespace tfs
