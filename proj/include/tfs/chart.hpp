#pragma once

#include "tfs/grammar.hpp"

namespace tfs {

struct ParseConfig {
  bool occurs_check = true;
  bool subsumption_filter = true;
  std::size_t max_items = 100000;  // 0 = unlimited
  std::optional<unsigned> restriction_depth;
  bool trace = false;
};

enum class Verdict { Accept, Reject, ResourceLimit };

struct ParseCounters {
  std::size_t generated = 0;   // candidate items built
  std::size_t retained = 0;    // currently retained
  std::size_t pruned = 0;      // discarded by dedup or subsumption filter
  std::size_t replaced = 0;    // strict-generalization replacements
  std::size_t failed_unifications = 0;
  std::size_t cycles_blocked = 0;  // combinations refused by occurs check
};

/// Dotted-rule record [i, sigma, j, k]; complete iff k = |sigma|.
struct ChartItem {
  std::size_t id = 0;
  std::size_t i = 0, j = 0, k = 1;
  Mrs sigma;
  std::string rule;                 // rule name, or the word for lexical items
  std::vector<std::size_t> parents;

  bool complete() const { return k == sigma.length(); }
};

/// Item order: indices equal componentwise and sigma_x subsumes sigma_y.
bool item_leq(const ChartItem& x, const ChartItem& y);

struct ParseResult {
  Verdict verdict = Verdict::Reject;
  std::vector<std::size_t> goal_items;
  std::vector<Fs> goal_heads;
  ParseCounters counters;
  std::vector<ChartItem> trace;  // retained items, when ParseConfig::trace
};

/// Bottom-up chart parse with the subsumption filter retention policy.
ParseResult parse(const Grammar& g, const std::vector<std::string>& words,
                  const ParseConfig& cfg = {});

/// Depth-d truncation: nodes at depth d keep their reentrancies among
/// themselves but lose outgoing arcs and are retyped bot. An FRD witness:
/// restrict_mrs(s, d) subsumes s, with finitely many results up to
/// variance over a fixed hierarchy and feature set.
Mrs restrict_mrs(const Mrs& s, unsigned depth);

}  // namespace tfs
