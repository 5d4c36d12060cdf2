#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "tfs/avm.hpp"
#include "tfs/chart.hpp"
#include "tfs/errors.hpp"

using namespace tfs;

namespace {

Grammar fig2() { return load_grammar_file(std::string(TFS_DATA_DIR) + "/fig2.tfg"); }
Grammar olp() { return load_grammar_file(std::string(TFS_DATA_DIR) + "/olp.tfg"); }

}  // namespace

TEST_CASE("the worked example accepts with the expected sentential TFS") {
  Grammar g = fig2();
  ParseResult r = parse(g, {"john", "loves", "her"});
  CHECK(r.verdict == Verdict::Accept);
  REQUIRE(r.goal_heads.size() == 1);
  CHECK(serialize(r.goal_heads[0]) ==
        "phrase(AGR:agr(NUM:sg, PER:3rd), CAT:s, "
        "SEM:sem(ARG1:john, ARG2:she, PRED:love))");
}

TEST_CASE("case clash rejects the reversed sentence") {
  Grammar g = fig2();
  ParseResult r = parse(g, {"her", "loves", "john"});
  CHECK(r.verdict == Verdict::Reject);
  CHECK(r.goal_heads.empty());
  CHECK(r.counters.failed_unifications > 0);
}

TEST_CASE("fragments and wrong lengths reject") {
  Grammar g = fig2();
  CHECK(parse(g, {"john"}).verdict == Verdict::Reject);
  CHECK(parse(g, {"john", "loves"}).verdict == Verdict::Reject);
  CHECK(parse(g, {"loves", "john", "her"}).verdict == Verdict::Reject);
  CHECK(parse(g, {}).verdict == Verdict::Reject);
}

TEST_CASE("unknown words are an input error") {
  Grammar g = fig2();
  CHECK_THROWS_AS(parse(g, {"john", "sees", "her"}), WordNotInLexicon);
}

TEST_CASE("verdicts agree with and without the filter on the worked grammar") {
  Grammar g = fig2();
  ParseConfig no_filter;
  no_filter.subsumption_filter = false;
  for (auto& words : std::vector<std::vector<std::string>>{
           {"john", "loves", "her"},
           {"her", "loves", "john"},
           {"john", "loves", "john"},
           {"loves"},
           {"john", "her"}}) {
    CHECK(parse(g, words).verdict == parse(g, words, no_filter).verdict);
  }
}

TEST_CASE("the non-off-line-parsable grammar needs the filter to terminate") {
  Grammar g = olp();
  ParseConfig cfg;
  cfg.max_items = 1000;

  ParseResult with = parse(g, {"w1"}, cfg);
  CHECK(with.verdict == Verdict::Accept);
  CHECK(with.counters.retained <= 20);

  cfg.subsumption_filter = false;
  ParseResult without = parse(g, {"w1"}, cfg);
  CHECK(without.verdict == Verdict::ResourceLimit);
  CHECK(without.counters.retained == 1000);
}

TEST_CASE("trace lists retained items with parent links") {
  Grammar g = olp();
  ParseConfig cfg;
  cfg.trace = true;
  ParseResult r = parse(g, {"w1"}, cfg);
  CHECK(r.trace.size() == r.counters.retained);
  bool found_combined = false;
  for (const ChartItem& it : r.trace) {
    CHECK(it.sigma.length() >= it.k);
    CHECK(it.k >= 1);
    CHECK(it.i <= it.j);
    CHECK(it.j <= 1);  // one-word input
    for (std::size_t p : it.parents) CHECK(p < it.id);
    if (it.parents.size() == 2) found_combined = true;
  }
  CHECK(found_combined);
}

TEST_CASE("item_leq orders by position and subsumption") {
  Grammar g = olp();
  ParseConfig cfg;
  cfg.trace = true;
  ParseResult r = parse(g, {"w1"}, cfg);
  for (const ChartItem& x : r.trace) {
    CHECK(item_leq(x, x));
    for (const ChartItem& y : r.trace)
      if (x.i != y.i || x.j != y.j || x.k != y.k) CHECK(!item_leq(x, y));
  }
}

TEST_CASE("restriction truncates at the requested depth") {
  HierarchyPtr h = olp().hierarchy;
  Mrs deep = parse_mrs("<t(F: t(F: t(F: bot)))>", h);

  Mrs r1 = restrict_mrs(deep, 1);
  CHECK(mrs_variant(r1, parse_mrs("<t(F: bot)>", h)));
  CHECK(static_cast<bool>(mrs_subsumes(r1, deep)));

  Mrs r0 = restrict_mrs(deep, 0);
  CHECK(mrs_variant(r0, parse_mrs("<bot>", h)));

  // Depth beyond the structure is the identity up to variance.
  CHECK(mrs_variant(restrict_mrs(deep, 9), deep));

  // Reentrancies between surviving nodes are kept.
  Mrs shared = parse_mrs("<t(F: #1=t(F: bot), G: #1)>", h);
  Mrs rs = restrict_mrs(shared, 1);
  CHECK(mrs_variant(rs, parse_mrs("<t(F: #1=bot, G: #1)>", h)));
}

TEST_CASE("restriction caps the reachable item vocabulary") {
  // With depth-1 restriction even the growing grammar has finitely many
  // item categories, so the no-filter parse terminates too.
  Grammar g = olp();
  ParseConfig cfg;
  cfg.subsumption_filter = false;
  cfg.restriction_depth = 1;
  cfg.max_items = 1000;
  ParseResult r = parse(g, {"w1"}, cfg);
  CHECK(r.verdict == Verdict::Accept);
  CHECK(r.counters.retained < 20);
}

TEST_CASE("cap counts retained items, replacements release their slot") {
  Grammar g = fig2();
  ParseConfig cfg;
  cfg.max_items = 3;
  ParseResult r = parse(g, {"john", "loves", "her"}, cfg);
  CHECK(r.verdict == Verdict::ResourceLimit);
  CHECK(r.counters.retained == 3);
}

TEST_CASE("occurs check mode is honoured during parsing") {
  // Rule whose head unifies a reentrant pair into its body element's
  // subtree, building a cycle when combined with the w loop lexeme.
  const char* src = R"(
    type t.
    word w := t(F: t(G: #1=bot), H: #1).
    rule r: t(A: #2) -> #2=t(F: #3, H: t(G: #3)).
    start := t.
  )";
  Grammar g = load_grammar(src);
  ParseConfig cfg;
  cfg.trace = true;
  // With the occurs check off this grammar grows without bound, so cap it;
  // the trace up to the cap is what the assertions need.
  cfg.max_items = 40;
  ParseResult strict = parse(g, {"w"}, cfg);
  cfg.occurs_check = false;
  ParseResult loose = parse(g, {"w"}, cfg);
  CHECK(loose.counters.cycles_blocked == 0);
  bool loose_has_cyclic = false;
  for (const ChartItem& it : loose.trace)
    if (mrs_cyclic(it.sigma)) loose_has_cyclic = true;
  CHECK(strict.counters.cycles_blocked > 0);
  CHECK(loose_has_cyclic);
  for (const ChartItem& it : strict.trace) CHECK(!mrs_cyclic(it.sigma));
}

TEST_CASE("goal requires the start structure to subsume the head") {
  // The olp start is t(F: bot); a start demanding more rejects.
  const char* src = R"(
    type t.
    type u < t.
    word w1 := t(F: bot).
    rule grow: t(F: #1) -> #1=t(F: bot).
    start := u.
  )";
  Grammar g = load_grammar(src);
  CHECK(parse(g, {"w1"}).verdict == Verdict::Reject);
}
