#include "tfs/chart.hpp"

#include <deque>

#include "tfs/errors.hpp"

namespace tfs {

bool item_leq(const ChartItem& x, const ChartItem& y) {
  if (x.i != y.i || x.j != y.j || x.k != y.k) return false;
  return static_cast<bool>(mrs_subsumes(x.sigma, y.sigma));
}

Mrs restrict_mrs(const Mrs& s, unsigned depth) {
  // Minimal arc distance from any root.
  std::map<NodeId, unsigned> dist;
  std::deque<NodeId> work;
  for (NodeId r : s.roots) {
    if (!dist.count(r)) {
      dist[r] = 0;
      work.push_back(r);
    }
  }
  while (!work.empty()) {
    NodeId q = work.front();
    work.pop_front();
    if (dist[q] >= depth) continue;
    for (const auto& [f, target] : s.nodes.at(q).arcs) {
      if (!dist.count(target)) {
        dist[target] = dist[q] + 1;
        work.push_back(target);
      }
    }
  }
  Mrs out;
  out.hier = s.hier;
  std::map<NodeId, NodeId> image;
  for (const auto& [q, d] : dist) image[q] = fresh_node();
  for (const auto& [q, d] : dist) {
    NodeData nd;
    if (d < depth) {
      nd.type = s.nodes.at(q).type;
      for (const auto& [f, target] : s.nodes.at(q).arcs)
        nd.arcs[f] = image.at(target);
    } else {
      nd.type = s.hier->bottom();
    }
    out.nodes.emplace(image.at(q), std::move(nd));
  }
  for (NodeId r : s.roots) out.roots.push_back(image.at(r));
  return out;
}

namespace {

class Engine {
 public:
  Engine(const Grammar& g, const std::vector<std::string>& words,
         const ParseConfig& cfg)
      : g_(g), words_(words), cfg_(cfg), n_(words.size()) {}

  ParseResult run() {
    if (!g_.start) throw Error("grammar has no start symbol");
    seed();
    while (!agenda_.empty() && !limit_hit_) {
      std::size_t id = agenda_.front();
      agenda_.pop_front();
      process(id);
    }
    ParseResult res;
    res.counters = counters_;
    if (limit_hit_) {
      res.verdict = Verdict::ResourceLimit;
    } else {
      collect_goals(res);
      res.verdict = res.goal_items.empty() ? Verdict::Reject : Verdict::Accept;
    }
    if (cfg_.trace)
      for (const Stored& st : items_)
        if (st.retained) res.trace.push_back(st.item);
    return res;
  }

 private:
  struct Stored {
    ChartItem item;
    bool retained = true;
    bool processed = false;
  };

  using CellKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

  void seed() {
    // Lexical completion: one complete length-1 item per input position.
    for (std::size_t p = 1; p <= n_ && !limit_hit_; ++p) {
      const Fs* cat = g_.category(words_[p - 1]);
      if (!cat) throw WordNotInLexicon(words_[p - 1]);
      ChartItem it;
      it.i = p - 1;
      it.j = p;
      it.k = 1;
      it.sigma = rename_apart(as_mrs(*cat));
      it.rule = words_[p - 1];
      add_item(std::move(it));
    }
    // Rule seeds at every position; empty-body rules are born complete.
    for (const Rule& r : g_.rules) {
      for (std::size_t p = 0; p <= n_ && !limit_hit_; ++p) {
        ChartItem it;
        it.i = p;
        it.j = p;
        it.k = 1;
        it.sigma = rename_apart(r.mrs);
        it.rule = r.name;
        add_item(std::move(it));
      }
    }
  }

  void process(std::size_t id) {
    Stored& st = items_[id];
    if (!st.retained || st.processed) return;
    st.processed = true;
    const ChartItem item = st.item;  // copy: items_ may reallocate
    if (item.complete()) {
      if (item.sigma.length() == 1) {
        // Pair with processed active items ending where this one starts.
        auto it = processed_active_.find(item.i);
        if (it != processed_active_.end()) {
          const std::vector<std::size_t> actives = it->second;
          for (std::size_t aid : actives) {
            if (limit_hit_) return;
            if (items_[aid].retained) combine(aid, id);
          }
        }
        processed_complete_[item.i].push_back(id);
      } else {
        // A freshly completed rule item contributes its derivable head as
        // a length-1 complete item.
        extract_head(id);
      }
      return;
    }
    auto it = processed_complete_.find(item.j);
    if (it != processed_complete_.end()) {
      const std::vector<std::size_t> completes = it->second;
      for (std::size_t cid : completes) {
        if (limit_hit_) return;
        if (items_[cid].retained) combine(id, cid);
      }
    }
    processed_active_[item.j].push_back(id);
  }

  // The fundamental rule: element k+1 of the active item's MRS is unified
  // with the complete item's head, applied to the MRS as a whole so
  // reentrancies propagate.
  void combine(std::size_t active_id, std::size_t complete_id) {
    const ChartItem& a = items_[active_id].item;
    const ChartItem& c = items_[complete_id].item;
    Fs head = project(c.sigma, 1);
    MrsUnifyResult u =
        mrs_unify_element(a.sigma, a.k + 1, head, cfg_.occurs_check);
    if (u.status == UnifyStatus::Inconsistent) {
      ++counters_.failed_unifications;
      return;
    }
    if (u.status == UnifyStatus::Cycle) {
      ++counters_.cycles_blocked;
      return;
    }
    ChartItem it;
    it.i = a.i;
    it.j = c.j;
    it.k = a.k + 1;
    it.sigma = std::move(*u.value);
    it.rule = a.rule;
    it.parents = {active_id, complete_id};
    add_item(std::move(it));
  }

  void extract_head(std::size_t rule_item_id) {
    const ChartItem& src = items_[rule_item_id].item;
    Fs head = project(src.sigma, 1);
    ChartItem it;
    it.i = src.i;
    it.j = src.j;
    it.k = 1;
    it.sigma = rename_apart(as_mrs(head));
    it.rule = src.rule;
    it.parents = {rule_item_id};
    add_item(std::move(it));
  }

  void add_item(ChartItem it) {
    ++counters_.generated;
    if (cfg_.restriction_depth)
      it.sigma = restrict_mrs(it.sigma, *cfg_.restriction_depth);
    CellKey key{it.i, it.j, it.k, it.sigma.length()};
    auto& cell = cells_[key];
    for (std::size_t other_id : cell) {
      Stored& other = items_[other_id];
      if (!other.retained) continue;
      bool other_leq = static_cast<bool>(mrs_subsumes(other.item.sigma, it.sigma));
      if (other_leq) {
        bool is_variant = static_cast<bool>(mrs_subsumes(it.sigma, other.item.sigma));
        if (is_variant || cfg_.subsumption_filter) {
          ++counters_.pruned;
          return;
        }
      }
    }
    if (cfg_.subsumption_filter) {
      for (std::size_t other_id : cell) {
        Stored& other = items_[other_id];
        if (!other.retained) continue;
        if (static_cast<bool>(mrs_subsumes(it.sigma, other.item.sigma))) {
          other.retained = false;
          --counters_.retained;
          ++counters_.replaced;
        }
      }
    }
    if (cfg_.max_items && counters_.retained + 1 > cfg_.max_items) {
      limit_hit_ = true;
      return;
    }
    it.id = items_.size();
    cell.push_back(it.id);
    agenda_.push_back(it.id);
    items_.push_back(Stored{std::move(it), true, false});
    ++counters_.retained;
  }

  void collect_goals(ParseResult& res) {
    for (const Stored& st : items_) {
      if (!st.retained) continue;
      const ChartItem& it = st.item;
      if (it.sigma.length() != 1 || !it.complete()) continue;
      if (it.i != 0 || it.j != n_) continue;
      Fs head = project(it.sigma, 1);
      if (subsumes(*g_.start, head)) {
        res.goal_items.push_back(it.id);
        res.goal_heads.push_back(std::move(head));
      }
    }
  }

  const Grammar& g_;
  const std::vector<std::string>& words_;
  const ParseConfig& cfg_;
  std::size_t n_;

  std::vector<Stored> items_;
  std::deque<std::size_t> agenda_;  // FIFO
  std::map<CellKey, std::vector<std::size_t>> cells_;
  std::map<std::size_t, std::vector<std::size_t>> processed_active_;    // by j
  std::map<std::size_t, std::vector<std::size_t>> processed_complete_;  // by i
  ParseCounters counters_;
  bool limit_hit_ = false;
};

}  // namespace

ParseResult parse(const Grammar& g, const std::vector<std::string>& words,
                  const ParseConfig& cfg) {
  return Engine(g, words, cfg).run();
}

}  // namespace tfs
