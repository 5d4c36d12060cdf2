#include "tfs/mrs.hpp"

#include "core.hpp"
#include "tfs/errors.hpp"

namespace tfs {

namespace {

void require_same_hierarchy(const HierarchyPtr& a, const HierarchyPtr& b) {
  if (a.get() != b.get()) throw MixedHierarchies();
}

void check_index(const Mrs& s, std::size_t i) {
  if (i < 1 || i > s.length())
    throw IndexOutOfRange("MRS index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(s.length()));
}

}  // namespace

Mrs empty_mrs(HierarchyPtr h) {
  Mrs s;
  s.hier = std::move(h);
  return s;
}

Mrs as_mrs(const Fs& a) {
  Mrs s;
  s.hier = a.hier;
  s.roots = {a.root};
  s.nodes = a.nodes;
  return s;
}

Fs project(const Mrs& s, std::size_t i) {
  check_index(s, i);
  Fs a;
  a.hier = s.hier;
  a.root = s.roots[i - 1];
  for (NodeId q : reachable_nodes(s.nodes, {a.root}))
    a.nodes.emplace(q, s.nodes.at(q));
  return a;
}

Mrs substructure(const Mrs& s, std::size_t i, std::size_t j) {
  if (i > j) return empty_mrs(s.hier);
  check_index(s, i);
  check_index(s, j);
  Mrs out;
  out.hier = s.hier;
  out.roots.assign(s.roots.begin() + static_cast<long>(i) - 1,
                   s.roots.begin() + static_cast<long>(j));
  for (NodeId q : reachable_nodes(s.nodes, out.roots))
    out.nodes.emplace(q, s.nodes.at(q));
  return out;
}

SubsumeResult mrs_subsumes(const Mrs& a, const Mrs& b) {
  require_same_hierarchy(a.hier, b.hier);
  if (a.length() != b.length()) {
    SubsumeResult res;
    res.failure = SubsumeFailure::LengthMismatch;
    return res;
  }
  if (a.empty()) {
    SubsumeResult res;
    res.morphism = Morphism{};
    return res;
  }
  return detail::find_morphism(a.nodes, a.roots, b.nodes, b.roots, *a.hier);
}

bool mrs_variant(const Mrs& a, const Mrs& b) {
  return static_cast<bool>(mrs_subsumes(a, b)) &&
         static_cast<bool>(mrs_subsumes(b, a));
}

bool mrs_cyclic(const Mrs& s) { return graph_cyclic(s.nodes, s.roots); }

std::vector<std::pair<Path, std::size_t>> mrs_paths(const Mrs& s) {
  if (mrs_cyclic(s)) throw CyclicStructure();
  std::vector<std::pair<Path, std::size_t>> out;
  for (std::size_t i = 1; i <= s.length(); ++i)
    detail::for_each_path(s.nodes, s.roots[i - 1],
                          [&](const Path& p, NodeId) { out.emplace_back(p, i); });
  return out;
}

RankReport mrs_rank(const Mrs& s) {
  if (mrs_cyclic(s)) throw CyclicStructure();
  RankReport r;
  for (NodeId root : s.roots)
    detail::for_each_path(s.nodes, root, [&](const Path&, NodeId q) {
      ++r.path_count;
      r.theta += s.hier->level(s.nodes.at(q).type);
    });
  r.delta = r.path_count - s.nodes.size();
  r.total = r.path_count + r.theta + r.delta;
  return r;
}

Mrs rename_apart(const Mrs& s) {
  Mrs out;
  out.hier = s.hier;
  RenamedGraph renamed = copy_renamed(s.nodes, s.roots);
  out.nodes = std::move(renamed.nodes);
  for (NodeId r : s.roots) out.roots.push_back(renamed.image.at(r));
  return out;
}

namespace {

MrsUnifyResult run_merge(const Mrs& s, const NodeMap& other,
                         const std::vector<std::pair<NodeId, NodeId>>& seeds,
                         bool occurs_check) {
  MrsUnifyResult res;
  detail::MergedGraph merged =
      detail::merge_graphs(s.nodes, other, seeds, s.roots, *s.hier);
  if (!merged.ok) {
    res.status = UnifyStatus::Inconsistent;
    res.clash_path = std::move(merged.clash_path);
    return res;
  }
  if (occurs_check && merged.cyclic) {
    res.status = UnifyStatus::Cycle;
    return res;
  }
  Mrs value;
  value.hier = s.hier;
  for (NodeId r : s.roots) value.roots.push_back(merged.image.at(r));
  value.nodes = std::move(merged.nodes);
  res.status = UnifyStatus::Ok;
  res.value = std::move(value);
  return res;
}

}  // namespace

MrsUnifyResult mrs_unify_element(const Mrs& s, std::size_t i, const Fs& b,
                                 bool occurs_check) {
  require_same_hierarchy(s.hier, b.hier);
  check_index(s, i);
  const NodeMap* bn = &b.nodes;
  NodeId broot = b.root;
  RenamedGraph renamed;
  if (detail::maps_share_ids(s.nodes, b.nodes)) {
    renamed = copy_renamed(b.nodes, {b.root});
    bn = &renamed.nodes;
    broot = renamed.image.at(b.root);
  }
  return run_merge(s, *bn, {{s.roots[i - 1], broot}}, occurs_check);
}

MrsUnifyResult mrs_unify(const Mrs& a, const Mrs& b, bool occurs_check) {
  require_same_hierarchy(a.hier, b.hier);
  if (a.length() != b.length())
    throw Error("mrs_unify: length mismatch");
  if (a.empty()) {
    MrsUnifyResult res;
    res.status = UnifyStatus::Ok;
    res.value = a;
    return res;
  }
  const NodeMap* bn = &b.nodes;
  std::vector<NodeId> broots = b.roots;
  RenamedGraph renamed;
  if (detail::maps_share_ids(a.nodes, b.nodes)) {
    renamed = copy_renamed(b.nodes, b.roots);
    bn = &renamed.nodes;
    for (NodeId& r : broots) r = renamed.image.at(r);
  }
  std::vector<std::pair<NodeId, NodeId>> seeds;
  for (std::size_t i = 0; i < a.roots.size(); ++i)
    seeds.emplace_back(a.roots[i], broots[i]);
  return run_merge(a, *bn, seeds, occurs_check);
}

}  // namespace tfs
