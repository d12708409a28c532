#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "seekbench/baselines.hpp"
#include "seekbench/presets.hpp"

using namespace seekbench;
using namespace seekbench::baselines;

namespace {

StepRecord make_step(int i, Query q, double value) {
  return StepRecord{i, std::move(q), Feedback{value, {}}, value};
}

}  // namespace

TEST_CASE("hill baseline: exploration is stratified in stratum order") {
  const int budget = 10;
  HillBaseline agent({0.8, 0.05}, budget, 42);
  // floor(0.8 * 10) = 8 exploration strata of width 10/8 = 1.25
  for (int t = 0; t < 8; ++t) {
    const auto reply = agent.next_query();
    const double x = std::get<HillQuery>(*reply.query).x;
    CHECK(x >= t * 1.25);
    CHECK(x < (t + 1) * 1.25);
    agent.observe(make_step(t + 1, *reply.query, 1.0));
  }
}

TEST_CASE("hill baseline: first stratum of N=10 is [0, 1.25)") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    HillBaseline agent({0.8, 0.05}, 10, seed);
    const auto reply = agent.next_query();
    const double x = std::get<HillQuery>(*reply.query).x;
    CHECK(x >= 0.0);
    CHECK(x < 1.25);
  }
}

TEST_CASE("hill baseline: exploitation window is clamped to the domain") {
  HillBaseline agent({0.8, 0.05}, 10, 7);
  for (int t = 0; t < 8; ++t) {
    const auto reply = agent.next_query();
    // make 9.9 the incumbent on the last explore step
    const double y = (t == 7) ? 5.0 : 0.1;
    StepRecord s = make_step(t + 1, *reply.query, y);
    if (t == 7) s.query = Query{HillQuery{9.9}};
    agent.observe(s);
  }
  for (int t = 8; t < 10; ++t) {
    const auto reply = agent.next_query();
    const double x = std::get<HillQuery>(*reply.query).x;
    CHECK(x >= 9.65);
    CHECK(x <= 10.0);
    agent.observe(make_step(t + 1, *reply.query, 0.0));
  }
}

TEST_CASE("hill baseline: alpha=0 with no history falls back to the domain") {
  HillBaseline agent({0.0, 0.05}, 10, 3);
  const auto reply = agent.next_query();
  const double x = std::get<HillQuery>(*reply.query).x;
  CHECK(x >= 0.0);
  CHECK(x < 10.0);
}

TEST_CASE("hill baseline: incumbent ties break to the earliest round") {
  HillBaseline agent({0.0, 0.05}, 100, 3);
  agent.observe(make_step(1, Query{HillQuery{2.0}}, 5.0));
  agent.observe(make_step(2, Query{HillQuery{8.0}}, 5.0));  // equal, later
  for (int i = 0; i < 50; ++i) {
    const auto reply = agent.next_query();
    const double x = std::get<HillQuery>(*reply.query).x;
    CHECK(x >= 1.75);
    CHECK(x <= 2.25);
  }
}

TEST_CASE("tree baseline: softmax over parent values matches e^2/(e^2+1)") {
  // Two candidates with parent values 8 and 0 at tau=4: the high-parent
  // candidate should win with probability e^2 / (e^2 + 1) ~ 0.881.
  // Build a tiny tree by hand: root with two children, each with one child.
  tree::Instance inst;
  inst.node_count = 5;
  inst.root = 0;
  inst.adjacency = {{1, 2}, {0, 3}, {0, 4}, {1}, {2}};
  inst.values = {0, 8, 0, 9, 1};
  inst.id_of_structural = {0, 1, 2, 3, 4};
  inst.max_value = 9;
  inst.params = {};

  int high = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    StepRecord s1 = make_step(1, Query{TreeQuery{1}}, 8.0);
    s1.feedback.new_nodes = {3};
    StepRecord s2 = make_step(2, Query{TreeQuery{2}}, 0.0);
    s2.feedback.new_nodes = {4};
    TreeBaseline agent({4.0}, inst, static_cast<std::uint64_t>(i));
    agent.observe(s1);
    agent.observe(s2);
    const auto reply = agent.next_query();
    if (std::get<TreeQuery>(*reply.query).node == 3) ++high;
  }
  const double p = static_cast<double>(high) / trials;
  const double expected = std::exp(2.0) / (std::exp(2.0) + 1.0);
  CHECK(std::abs(p - expected) < 0.01);
}

TEST_CASE("tree baseline: huge tau approaches a uniform pick") {
  const auto inst = tree::generate({3, 3, 5, 40, 12, 5});
  std::map<NodeId, int> counts;
  const int trials = 30000;
  for (int i = 0; i < trials; ++i) {
    TreeBaseline agent({1e9}, inst, static_cast<std::uint64_t>(i));
    const auto reply = agent.next_query();
    counts[std::get<TreeQuery>(*reply.query).node]++;
  }
  CHECK(counts.size() == 6);
  for (const auto& [node, count] : counts) {
    CHECK(std::abs(count / static_cast<double>(trials) - 1.0 / 6) < 0.02);
  }
}

TEST_CASE("tree baseline: single candidate is chosen with probability 1") {
  const auto inst = tree::generate({1, 0, 1, 10, 12, 6});
  TreeBaseline agent({4.0}, inst, 9);
  const auto reply = agent.next_query();
  const NodeId gateway = std::get<TreeQuery>(*reply.query).node;
  CHECK(inst.values[static_cast<std::size_t>(gateway)] == 2);
}

TEST_CASE("tree baseline: tau=0 is greedy argmax over parent values") {
  const auto inst = tree::generate({3, 3, 5, 40, 12, 10});
  // After observing one gateway of value 2, all its children score 2 and
  // every other candidate scores 0: greedy must pick one of the children.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TreeBaseline agent({0.0}, inst, seed);
    const auto first = agent.next_query();
    const NodeId g =
        std::get<TreeQuery>(*first.query).node;  // some gateway, parent 0
    StepRecord s = make_step(1, *first.query, 2.0);
    for (NodeId nb : inst.adjacency[static_cast<std::size_t>(g)]) {
      if (nb != inst.root) s.feedback.new_nodes.push_back(nb);
    }
    TreeBaseline greedy({0.0}, inst, seed);
    greedy.observe(s);
    const auto reply = greedy.next_query();
    const NodeId pick = std::get<TreeQuery>(*reply.query).node;
    const auto& kids = s.feedback.new_nodes;
    CHECK(std::find(kids.begin(), kids.end(), pick) != kids.end());
  }
}

TEST_CASE("tree baseline: sampled node is always a frontier node") {
  const auto inst = tree::generate({2, 2, 3, 20, 10, 11});
  TreeBaseline agent({4.0}, inst, 12);
  tree::Frontier frontier(inst);
  for (int round = 1; round <= 40; ++round) {
    const auto reply = agent.next_query();
    const NodeId node = std::get<TreeQuery>(*reply.query).node;
    CHECK(!frontier.validate(node).has_value());
    auto [value, fresh] = frontier.query(node, round);
    StepRecord s = make_step(round, *reply.query, value);
    s.feedback.new_nodes = fresh;
    agent.observe(s);
  }
}

TEST_CASE("sat baseline: explore/exploit split at floor(alpha N)") {
  const int n = 15, budget = 48;
  SatBaseline agent({0.5}, n, budget, 13);
  // 24 exploration rounds: uniform random assignments
  std::vector<std::uint8_t> best;
  for (int t = 0; t < 24; ++t) {
    const auto reply = agent.next_query();
    const auto& bits = std::get<SatQuery>(*reply.query).bits;
    REQUIRE(bits.size() == 15);
    StepRecord s = make_step(t + 1, *reply.query, t == 5 ? 100.0 : 1.0);
    if (t == 5) best = bits;
    agent.observe(s);
  }
  // exploitation: every query is a Hamming-1 neighbor of the incumbent
  for (int t = 24; t < budget; ++t) {
    const auto reply = agent.next_query();
    const auto& bits = std::get<SatQuery>(*reply.query).bits;
    int dist = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      dist += bits[i] != best[i];
    }
    CHECK(dist == 1);
    agent.observe(make_step(t + 1, *reply.query, 0.0));
  }
}

TEST_CASE("sat baseline: alpha=1 is pure random search with 2^-k gold rate") {
  // Expected gold hits over N draws is N * 2^-k_gold; simulate many
  // episodes and compare against the Bernoulli expectation.
  const auto inst = presets::make("sat-main").as_sat();
  const int budget = 48;
  const int episodes = 2000;
  long long hits = 0;
  for (int e = 0; e < episodes; ++e) {
    SatBaseline agent({1.0}, inst.n, budget, static_cast<std::uint64_t>(e));
    for (int t = 0; t < budget; ++t) {
      const auto reply = agent.next_query();
      const auto& bits = std::get<SatQuery>(*reply.query).bits;
      if (maxsat::count_satisfied(inst, bits) >= inst.w_gold) ++hits;
      agent.observe(make_step(t + 1, *reply.query, 0.0));
    }
  }
  const double per_draw = static_cast<double>(hits) / (episodes * budget);
  const double expect = 1.0 / 16.0;
  const double sigma = std::sqrt(expect * (1 - expect) /
                                 (static_cast<double>(episodes) * budget));
  CHECK(std::abs(per_draw - expect) <= 4.0 * sigma);
}

TEST_CASE("make_baseline dispatches on the instance task") {
  const auto hill_inst = presets::make("hill-main");
  const auto tree_inst = presets::make("tree-main");
  const auto sat_inst = presets::make("sat-main");
  auto h = make_baseline(hill_inst, 48, 1);
  auto t = make_baseline(tree_inst, 48, 1);
  auto s = make_baseline(sat_inst, 48, 1);
  CHECK(std::holds_alternative<HillQuery>(*h->next_query().query));
  CHECK(std::holds_alternative<TreeQuery>(*t->next_query().query));
  CHECK(std::holds_alternative<SatQuery>(*s->next_query().query));
}

TEST_CASE("replay agent repeats its last query when exhausted") {
  ReplayAgent agent({Query{HillQuery{1.0}}, Query{HillQuery{2.0}}});
  CHECK(std::get<HillQuery>(*agent.next_query().query).x == 1.0);
  CHECK(std::get<HillQuery>(*agent.next_query().query).x == 2.0);
  CHECK(std::get<HillQuery>(*agent.next_query().query).x == 2.0);
}
