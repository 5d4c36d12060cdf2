#pragma once

#include <optional>
#include <variant>

#include "tfs/hierarchy.hpp"
#include "tfs/node_graph.hpp"

namespace tfs {

/// Rooted, connected, feature-labeled graph with per-node types.
/// Immutable by convention after construction; all operations are pure.
struct Fs {
  HierarchyPtr hier;
  NodeId root = 0;
  NodeMap nodes;

  const NodeData& node(NodeId q) const { return nodes.at(q); }
  TypeId type_of(NodeId q) const { return nodes.at(q).type; }
};

/// Single-node structure typed bot: the unit of unification and the
/// bottom of the subsumption preorder.
Fs bot_fs(HierarchyPtr h);

/// Node reached by following `p` from `q`, if every arc exists.
std::optional<NodeId> resolve(const Fs& a, NodeId q, const Path& p);

bool is_cyclic(const Fs& a);

/// Exactly the path set of `a`, by depth-first enumeration.
/// Throws CyclicStructure when the path set would be infinite.
std::vector<Path> paths(const Fs& a);

struct Morphism {
  std::map<NodeId, NodeId> map;
};

enum class SubsumeFailure {
  None,
  MissingArc,         // an arc of the subsumer has no counterpart
  TypeClash,          // type condition fails at some node
  InconsistentImage,  // propagation assigned two images to one node
  LengthMismatch,     // MRS lengths differ
};

struct SubsumeResult {
  std::optional<Morphism> morphism;
  SubsumeFailure failure = SubsumeFailure::None;
  NodeId at = 0;     // subsumer node where the check failed
  Feature feature;   // offending feature for MissingArc

  explicit operator bool() const { return morphism.has_value(); }
};

/// Deterministic BFS construction of the (unique) subsumption morphism
/// from `a` to `b`, or the first failing condition.
SubsumeResult subsumes(const Fs& a, const Fs& b);

/// Mutual subsumption: equality up to node renaming.
bool variant(const Fs& a, const Fs& b);

struct NewPath {
  Path path;
};
struct TypePromotion {
  NodeId node = 0;
  TypeId from = 0, to = 0;
  Path path;
};
struct NewReentrancy {
  Path path1, path2;
};
using StrictnessWitness = std::variant<NewPath, TypePromotion, NewReentrancy>;

/// Verifiable certificate that a strictly subsumes b, searched in the
/// order: new path, type promotion, new reentrancy.
/// Throws NotStrict when a,b are variants or a does not subsume b.
StrictnessWitness strictness_witness(const Fs& a, const Fs& b);

struct RankReport {
  std::size_t path_count = 0;  // |Pi|
  std::size_t theta = 0;       // sum of levels over path endpoints
  std::size_t delta = 0;       // |Pi| - |Q|
  std::size_t total = 0;
};

/// rank(a) = |Pi| + Theta + Delta; defined for acyclic structures only.
RankReport rank(const Fs& a);

enum class UnifyStatus { Ok, Inconsistent, Cycle };

struct UnifyResult {
  UnifyStatus status = UnifyStatus::Inconsistent;
  std::optional<Fs> value;
  Path clash_path;  // path whose merged type is top (Inconsistent only)

  explicit operator bool() const { return status == UnifyStatus::Ok; }
};

/// Least upper bound of {a, b} under subsumption. Fresh node identities
/// are allocated for the result. With occurs_check on, a cyclic result
/// is refused with status Cycle.
UnifyResult unify(const Fs& a, const Fs& b, bool occurs_check = true);

/// A_i of the non-well-foundedness witness: i+1 nodes in an f-chain, the
/// last carrying an f-arc to itself; all nodes typed bot.
Fs cyclic_chain(std::size_t i, HierarchyPtr h,
                const Feature& f = "F");

/// B_i of the increasing-chain construction: acyclic f-chain of i+1
/// nodes, the first i typed t, the last typed bot.
Fs spec_chain(std::size_t i, TypeId t, HierarchyPtr h,
              const Feature& f = "F");

}  // namespace tfs
