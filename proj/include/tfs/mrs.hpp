#pragma once

#include "tfs/feature_structure.hpp"

namespace tfs {

/// Ordered repetition-free root sequence over a shared graph.
/// The empty MRS (lambda) has zero roots and zero nodes.
struct Mrs {
  HierarchyPtr hier;
  std::vector<NodeId> roots;
  NodeMap nodes;

  std::size_t length() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
};

Mrs empty_mrs(HierarchyPtr h);

/// Wraps a feature structure as a length-1 MRS (shares node ids).
Mrs as_mrs(const Fs& a);

/// Feature structure induced by root `i` (1-based); nodes restricted to
/// those reachable from it. Shares node ids with the input.
Fs project(const Mrs& s, std::size_t i);

/// <A_i,...,A_j> with sharing preserved; lambda when i > j (1-based).
Mrs substructure(const Mrs& s, std::size_t i, std::size_t j);

/// BFS morphism construction seeded with all root pairs simultaneously.
/// Fails immediately with LengthMismatch when lengths differ.
SubsumeResult mrs_subsumes(const Mrs& a, const Mrs& b);

bool mrs_variant(const Mrs& a, const Mrs& b);

bool mrs_cyclic(const Mrs& s);

/// All (path, root-index) pairs, 1-based. Throws CyclicStructure.
std::vector<std::pair<Path, std::size_t>> mrs_paths(const Mrs& s);

/// Same rank function lifted to MRSs.
RankReport mrs_rank(const Mrs& s);

/// Variant of `s` with all-fresh node identifiers.
Mrs rename_apart(const Mrs& s);

struct MrsUnifyResult {
  UnifyStatus status = UnifyStatus::Inconsistent;
  std::optional<Mrs> value;
  Path clash_path;
  explicit operator bool() const { return status == UnifyStatus::Ok; }
};

/// Unifies element `i` (1-based) of `s` with `b`, applied to `s` as a
/// whole so reentrancies propagate into the other elements.
MrsUnifyResult mrs_unify_element(const Mrs& s, std::size_t i, const Fs& b,
                                 bool occurs_check = true);

/// Pairwise unification of two equal-length MRSs over the combined graph.
MrsUnifyResult mrs_unify(const Mrs& a, const Mrs& b, bool occurs_check = true);

}  // namespace tfs
