#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfs/avm.hpp"
#include "tfs/chart.hpp"
#include "tfs/errors.hpp"
#include "tfs/grammar.hpp"

namespace {

// Exit codes: 0 accept/success, 1 reject, 2 usage/input error, 3 resource
// limit.
constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

std::vector<std::string> split_words(const std::string& sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tfs::Error("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const char* verdict_name(tfs::Verdict v) {
  switch (v) {
    case tfs::Verdict::Accept: return "accept";
    case tfs::Verdict::Reject: return "reject";
    case tfs::Verdict::ResourceLimit: return "resource-limit";
  }
  return "?";
}

std::string item_line(const tfs::ChartItem& it) {
  std::ostringstream out;
  out << "ITEM " << it.id << " [" << it.i << "," << it.j << "," << it.k
      << "] rule=" << it.rule << " parents=(";
  for (std::size_t p = 0; p < it.parents.size(); ++p)
    out << (p ? "," : "") << it.parents[p];
  out << ") mrs=" << tfs::serialize(it.sigma);
  return out.str();
}

nlohmann::json counters_json(const tfs::ParseCounters& c) {
  return {{"generated", c.generated},
          {"retained", c.retained},
          {"pruned", c.pruned},
          {"replaced", c.replaced},
          {"failed_unifications", c.failed_unifications},
          {"cycles_blocked", c.cycles_blocked}};
}

int cmd_check(const std::string& path) {
  tfs::Grammar g = tfs::load_grammar_file(path);
  std::cout << "grammar ok: " << g.type_decls.size() << " types, "
            << g.rules.size() << " rules, " << g.lexicon.size() << " words\n";
  return kOk;
}

int cmd_parse(const std::string& path, const std::string& sentence,
              const tfs::ParseConfig& cfg, bool json) {
  tfs::Grammar g = tfs::load_grammar_file(path);
  if (!g.start) throw tfs::Error("grammar declares no start structure");
  std::vector<std::string> words = split_words(sentence);
  tfs::ParseResult r = tfs::parse(g, words, cfg);
  if (json) {
    for (const tfs::ChartItem& it : r.trace) {
      nlohmann::json line = {{"item", it.id},
                             {"i", it.i},
                             {"j", it.j},
                             {"k", it.k},
                             {"rule", it.rule},
                             {"parents", it.parents},
                             {"mrs", tfs::serialize(it.sigma)}};
      std::cout << line.dump() << "\n";
    }
    nlohmann::json out = {{"verdict", verdict_name(r.verdict)},
                          {"counters", counters_json(r.counters)}};
    out["heads"] = nlohmann::json::array();
    for (const tfs::Fs& h : r.goal_heads)
      out["heads"].push_back(tfs::serialize(h));
    std::cout << out.dump() << "\n";
  } else {
    for (const tfs::ChartItem& it : r.trace) std::cout << item_line(it) << "\n";
    std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
    for (const tfs::Fs& h : r.goal_heads)
      std::cout << "head: " << tfs::serialize(h) << "\n";
    const tfs::ParseCounters& c = r.counters;
    std::cout << "items: generated=" << c.generated
              << " retained=" << c.retained << " pruned=" << c.pruned
              << " replaced=" << c.replaced
              << " failed-unifications=" << c.failed_unifications
              << " cycles-blocked=" << c.cycles_blocked << "\n";
  }
  switch (r.verdict) {
    case tfs::Verdict::Accept: return kOk;
    case tfs::Verdict::Reject: return kReject;
    case tfs::Verdict::ResourceLimit: return kLimit;
  }
  return kUsage;
}

int cmd_fs(const std::string& sub, const std::string& grammar_path,
           const std::vector<std::string>& files) {
  tfs::Grammar g = tfs::load_grammar_file(grammar_path);
  std::vector<tfs::Fs> args;
  for (const std::string& f : files)
    args.push_back(tfs::parse_avm(read_file(f), g.hierarchy));

  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw tfs::Error("fs " + sub + " expects " + std::to_string(n) +
                       " AVM file(s)");
  };
  if (sub == "subsume") {
    need(2);
    tfs::SubsumeResult r = tfs::subsumes(args[0], args[1]);
    if (!r) {
      std::cout << "no morphism\n";
      return kReject;
    }
    std::cout << "morphism (" << r.morphism->map.size() << " nodes)\n";
    for (const auto& [q, h] : r.morphism->map)
      std::cout << "  " << q << " -> " << h << "\n";
    return kOk;
  }
  if (sub == "unify") {
    need(2);
    tfs::UnifyResult r = tfs::unify(args[0], args[1]);
    if (r.status == tfs::UnifyStatus::Inconsistent) {
      std::cout << "INCONSISTENT at " << tfs::path_to_string(r.clash_path)
                << "\n";
      return kReject;
    }
    if (r.status == tfs::UnifyStatus::Cycle) {
      std::cout << "CYCLE\n";
      return kReject;
    }
    std::cout << tfs::serialize(*r.value) << "\n";
    return kOk;
  }
  if (sub == "rank") {
    need(1);
    tfs::RankReport r = tfs::rank(args[0]);
    std::cout << "rank=" << r.total << " (|Π|=" << r.path_count
              << " Θ=" << r.theta << " Δ=" << r.delta << ")\n";
    return kOk;
  }
  if (sub == "cyclic") {
    need(1);
    std::cout << (tfs::is_cyclic(args[0]) ? "true" : "false") << "\n";
    return kOk;
  }
  if (sub == "paths") {
    need(1);
    for (const tfs::Path& p : tfs::paths(args[0]))
      std::cout << tfs::path_to_string(p) << "\n";
    return kOk;
  }
  throw tfs::Error("unknown fs subcommand: " + sub);
}

int cmd_demo(const std::string& which, long n) {
  if (n < 1) throw tfs::Error("demo needs n >= 1");
  bool cyclic = which == "cyclic-chain";
  if (!cyclic && which != "spec-chain")
    throw tfs::Error("unknown demo: " + which);

  std::vector<tfs::TypeDecl> decls;
  if (!cyclic) decls.push_back({"t", {}});
  auto h = std::make_shared<const tfs::TypeHierarchy>(
      tfs::TypeHierarchy::validate(decls));

  std::vector<tfs::Fs> chain;
  for (long i = 0; i < n; ++i)
    chain.push_back(cyclic ? tfs::cyclic_chain(static_cast<std::size_t>(i), h)
                           : tfs::spec_chain(static_cast<std::size_t>(i),
                                             h->id("t"), h));
  bool all_ok = true;
  for (long i = 0; i < n; ++i) {
    const tfs::Fs& a = chain[static_cast<std::size_t>(i)];
    std::cout << (cyclic ? "A_" : "B_") << i << " nodes=" << a.nodes.size()
              << " cyclic=" << (tfs::is_cyclic(a) ? "yes" : "no");
    if (cyclic) {
      std::cout << " rank=n/a";
    } else {
      std::cout << " rank=" << tfs::rank(a).total;
    }
    if (i + 1 < n) {
      const tfs::Fs& b = chain[static_cast<std::size_t>(i + 1)];
      // The cyclic sequence decreases (A_i is more specific than A_{i+1});
      // the specification chain increases.
      const tfs::Fs& more = cyclic ? a : b;
      const tfs::Fs& less = cyclic ? b : a;
      bool strict = static_cast<bool>(tfs::subsumes(less, more)) &&
                    !static_cast<bool>(tfs::subsumes(more, less));
      all_ok = all_ok && strict;
      if (cyclic)
        std::cout << " A_" << i << " ⊐ A_" << i + 1 << ": "
                  << (strict ? "yes" : "NO");
      else
        std::cout << " B_" << i << " ⊏ B_" << i + 1 << ": "
                  << (strict ? "yes" : "NO");
    } else {
      std::cout << (cyclic ? " A_" : " B_") << i << " end of chain";
    }
    std::cout << "\n";
  }
  return all_ok ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typed-feature-structure toolkit and chart parser"};
  app.require_subcommand(1);

  std::string grammar_path, sentence, fs_sub, demo_which;
  std::vector<std::string> fs_files;
  long demo_n = 0;
  bool json = false;
  tfs::ParseConfig cfg;
  bool no_filter = false, no_occurs = false;
  unsigned restrict_depth = 0;

  CLI::App* check = app.add_subcommand("check", "validate a grammar file");
  check->add_option("grammar", grammar_path)->required();

  CLI::App* parse = app.add_subcommand("parse", "parse a sentence");
  parse->add_option("grammar", grammar_path)->required();
  parse->add_option("sentence", sentence)->required();
  parse->add_flag("--no-filter", no_filter);
  parse->add_flag("--no-occurs-check", no_occurs);
  parse->add_option("--max-items", cfg.max_items);
  parse->add_option("--restrict", restrict_depth)
      ->check(CLI::NonNegativeNumber);
  parse->add_flag("--trace", cfg.trace);
  parse->add_flag("--json", json);

  CLI::App* fs = app.add_subcommand("fs", "feature-structure algebra");
  fs->add_option("subcommand", fs_sub)->required();
  fs->add_option("--grammar", grammar_path, "grammar supplying the hierarchy")
      ->required();
  fs->add_option("files", fs_files);

  CLI::App* demo = app.add_subcommand("demo", "chain demonstrations");
  demo->add_option("which", demo_which)->required();
  demo->add_option("n", demo_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(grammar_path);
    if (parse->parsed()) {
      cfg.subsumption_filter = !no_filter;
      cfg.occurs_check = !no_occurs;
      if (parse->count("--restrict")) cfg.restriction_depth = restrict_depth;
      return cmd_parse(grammar_path, sentence, cfg, json);
    }
    if (fs->parsed()) return cmd_fs(fs_sub, grammar_path, fs_files);
    if (demo->parsed()) return cmd_demo(demo_which, demo_n);
  } catch (const tfs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
