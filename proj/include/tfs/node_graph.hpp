#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tfs {

using NodeId = std::uint64_t;
using TypeId = std::uint32_t;

/// Implicit inconsistency marker; never stored in a structure.
inline constexpr TypeId kTopType = 0xffffffffu;

using Feature = std::string;
using Path = std::vector<Feature>;

/// Allocates a process-wide fresh node identifier (thread-safe).
NodeId fresh_node();

struct NodeData {
  TypeId type = 0;
  std::map<Feature, NodeId> arcs;  // sorted by feature name
};

using NodeMap = std::map<NodeId, NodeData>;

std::string path_to_string(const Path& p);

/// Nodes reachable from the given roots by following arcs.
std::set<NodeId> reachable_nodes(const NodeMap& nodes,
                                 const std::vector<NodeId>& roots);

/// Back-edge detection over the arc graph restricted to `nodes`.
bool graph_cyclic(const NodeMap& nodes, const std::vector<NodeId>& roots);

struct RenamedGraph {
  NodeMap nodes;
  std::map<NodeId, NodeId> image;  // old id -> fresh id
};

/// Fresh-id copy of the subgraph reachable from `roots`.
RenamedGraph copy_renamed(const NodeMap& nodes,
                          const std::vector<NodeId>& roots);

}  // namespace tfs
