#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "seekbench/presets.hpp"

using namespace seekbench;

// ---------------------------------------------------------------- hill ---

namespace {

// Independent evaluation from literal constants, kept apart from
// hill::eval so the two routes check each other.
double direct_sum(const std::vector<hill::Hill>& hills, double x) {
  double s = 0.0;
  for (const auto& h : hills) {
    s += h.height * std::exp(-(x - h.center) * (x - h.center) / h.width);
  }
  return s;
}

}  // namespace

TEST_CASE("hill: generation produces 2^k hills with one height-20 needle") {
  hill::GenParams p;
  p.k = 3;
  p.k_prime = 4;
  p.seed = 5;
  const auto inst = hill::generate(p);
  CHECK(inst.hills.size() == 8);  // 7 decoys + needle
  int needles = 0;
  for (const auto& h : inst.hills) {
    if (h.height == 20.0) ++needles;
    if (h.height != 20.0) {
      CHECK(h.height >= 1.0);
      CHECK(h.height <= 5.0);
    }
  }
  CHECK(needles == 1);
  CHECK(inst.needle_index == 7);
}

TEST_CASE("hill: k=1 means one interior decoy plus the needle") {
  hill::GenParams p;
  p.k = 1;
  p.k_prime = 3;
  p.seed = 2;
  const auto inst = hill::generate(p);
  CHECK(inst.hills.size() == 2);
}

TEST_CASE("hill: decoy centers stay within the jitter bound of their grid") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    hill::GenParams p;
    p.k = 3;
    p.k_prime = 5;
    p.seed = seed;
    const auto inst = hill::generate(p);
    const double dx = 10.0 / 8.0;
    for (int m = 1; m <= 7; ++m) {
      const auto& h = inst.hills[static_cast<std::size_t>(m - 1)];
      CHECK(std::abs(h.center - m * dx) <= p.jitter_decoy * dx + 1e-12);
      CHECK(h.width == doctest::Approx(p.width_decoy * dx));
    }
    const auto& needle = inst.hills.back();
    CHECK(needle.height == 20.0);
    // base point on an odd fine index, so off the coarse grid
    const double fine = 10.0 / 32.0;
    const double base =
        std::round((needle.center) / fine) * fine;  // nearest fine point
    CHECK(std::abs(needle.center - base) <= p.jitter_needle * fine + 1e-9);
  }
}

TEST_CASE("hill: same seed regenerates identical hills") {
  hill::GenParams p;
  p.k = 4;
  p.k_prime = 6;
  p.seed = 99;
  const auto a = hill::generate(p);
  const auto b = hill::generate(p);
  REQUIRE(a.hills.size() == b.hills.size());
  for (std::size_t i = 0; i < a.hills.size(); ++i) {
    CHECK(a.hills[i].center == b.hills[i].center);
    CHECK(a.hills[i].width == b.hills[i].width);
    CHECK(a.hills[i].height == b.hills[i].height);
  }
  CHECK(a.global_max == b.global_max);
}

TEST_CASE("hill: eval at a single hill's center equals its height") {
  auto inst = hill::from_hills({{5.0, 0.1, 3.0}}, 0);
  CHECK(hill::eval(inst, 5.0) == doctest::Approx(3.0));
  CHECK(inst.global_max == doctest::Approx(3.0));
}

TEST_CASE("hill: evaluated-instance values at 2.77 and 1.3") {
  const auto inst = presets::make("hill-main").as_hill();
  // Two routes: library eval vs direct summation from the instance data.
  const double f_277 = hill::eval(inst, 2.77);
  CHECK(f_277 == doctest::Approx(direct_sum(inst.hills, 2.77)).epsilon(1e-12));
  // The height-5 decoy sits at 2.77; everything else is >= 1.24 away.
  CHECK(f_277 == doctest::Approx(5.0).epsilon(1e-4));

  const double f_13 = hill::eval(inst, 1.3);
  CHECK(f_13 == doctest::Approx(direct_sum(inst.hills, 1.3)).epsilon(1e-12));
  // needle (20) + the 1.33 decoy tail: 1 * exp(-0.03^2 / 0.1)
  CHECK(f_13 == doctest::Approx(20.0 + std::exp(-0.0009 / 0.1)).epsilon(1e-4));
  CHECK(f_13 == doctest::Approx(20.99).epsilon(1e-3));
}

TEST_CASE("hill: global max of the evaluated instance is the needle peak") {
  const auto inst = presets::make("hill-main").as_hill();
  CHECK(inst.global_max == doctest::Approx(20.99).epsilon(2e-4));
  CHECK(inst.global_max >= 20.0);
  // Dense-grid oracle: no sampled point may beat the reported max.
  for (int i = 0; i <= 100000; ++i) {
    const double x = 10.0 * i / 100000.0;
    CHECK(hill::eval(inst, x) <= inst.global_max + 1e-9);
  }
}

TEST_CASE("hill: two identical far-apart hills share the max") {
  auto inst = hill::from_hills({{2.0, 0.1, 4.0}, {8.0, 0.1, 4.0}}, 0);
  CHECK(inst.global_max == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("hill: f stays positive and f(center) >= height") {
  const auto inst = presets::make("hill-main").as_hill();
  for (const auto& h : inst.hills) {
    CHECK(hill::eval(inst, h.center) >= h.height);
  }
  for (int i = 0; i <= 1000; ++i) {
    CHECK(hill::eval(inst, i * 0.01) > 0.0);
  }
}

TEST_CASE("hill: out-of-domain queries are rejected, not clamped") {
  const auto inst = presets::make("hill-main").as_hill();
  CHECK(hill::validate(inst, -0.1).has_value());
  CHECK(hill::validate(inst, 10.1).has_value());
  CHECK(hill::validate(inst, std::nan("")).has_value());
  CHECK(!hill::validate(inst, 0.0).has_value());
  CHECK(!hill::validate(inst, 10.0).has_value());
}

// ---------------------------------------------------------------- tree ---

TEST_CASE("tree: evaluated instances match the published size and maximum") {
  struct Row {
    tree::GenParams p;
    int nodes;
    int max;
  };
  const Row rows[] = {
      {{3, 3, 5, 40, 12, 1}, 772, 45},
      {{2, 2, 3, 40, 14, 2}, 323, 53},
      {{4, 4, 4, 40, 16, 3}, 889, 61},
  };
  for (const auto& row : rows) {
    const auto inst = tree::generate(row.p);
    CHECK(inst.node_count == row.nodes);
    CHECK(inst.max_value == row.max);
    CHECK(tree::expected_node_count(row.p) == row.nodes);
    CHECK(tree::expected_max_value(row.p) == row.max);
  }
}

TEST_CASE("tree: structure is a tree over permuted ids with root value 0") {
  const auto inst = tree::generate({3, 3, 5, 40, 12, 7});
  CHECK(inst.values[static_cast<std::size_t>(inst.root)] == 0);
  std::size_t edges = 0;
  for (const auto& nbrs : inst.adjacency) edges += nbrs.size();
  CHECK(edges == 2u * (static_cast<std::size_t>(inst.node_count) - 1));
}

TEST_CASE("tree: every edge differs by at most 4 (50 random instances)") {
  Rng rng(2024);
  for (int i = 0; i < 50; ++i) {
    const auto params =
        presets::random_tree_params(rng, static_cast<std::uint64_t>(1000 + i));
    const auto inst = tree::generate(params);
    for (NodeId v = 0; v < inst.node_count; ++v) {
      for (NodeId nb : inst.adjacency[static_cast<std::size_t>(v)]) {
        CHECK(std::abs(inst.values[static_cast<std::size_t>(v)] -
                       inst.values[static_cast<std::size_t>(nb)]) <= 4);
      }
    }
  }
}

TEST_CASE("tree: trap chain values follow the momentum-then-sparse ramp") {
  // Single trap gateway, one chain: walk it and check the published
  // pattern (gateway 2, +1 for six nodes, then +1 every fourth node).
  const auto inst = tree::generate({1, 0, 1, 40, 12, 4});
  tree::Frontier frontier(inst);
  REQUIRE(frontier.available().size() == 1);
  const NodeId gateway = frontier.available()[0];
  auto [gv, fresh] = frontier.query(gateway, 1);
  CHECK(gv == 2);
  std::vector<int> chain_values;
  int round = 2;
  std::vector<NodeId> next = fresh;
  while (!next.empty()) {
    REQUIRE(next.size() == 1);
    auto [v, fr] = frontier.query(next[0], round++);
    chain_values.push_back(v);
    next = fr;
  }
  REQUIRE(chain_values.size() == 40);
  CHECK(chain_values[0] == 3);
  CHECK(chain_values[5] == 8);   // 6th node past the gateway
  CHECK(chain_values[6] == 8);
  CHECK(chain_values[9] == 9);   // first sparse bump
  CHECK(chain_values[39] == 2 + 6 + (40 - 6) / 4);
  for (std::size_t i = 1; i < chain_values.size(); ++i) {
    const int d = chain_values[i] - chain_values[i - 1];
    CHECK(d >= 0);
    CHECK(d <= 1);
  }
}

TEST_CASE("tree: good chain climbs by 4 to the published maximum") {
  const auto inst = tree::generate({0, 1, 1, 40, 12, 4});
  tree::Frontier frontier(inst);
  auto [gv, fresh] = frontier.query(frontier.available()[0], 1);
  CHECK(gv == 1);
  std::vector<int> chain_values;
  int round = 2;
  auto next = fresh;
  while (!next.empty()) {
    auto [v, fr] = frontier.query(next[0], round++);
    chain_values.push_back(v);
    next = fr;
  }
  REQUIRE(chain_values.size() == 11);
  CHECK(chain_values.front() == 5);
  CHECK(chain_values.back() == 45);
  for (std::size_t i = 1; i < chain_values.size(); ++i) {
    CHECK(chain_values[i] - chain_values[i - 1] == 4);
  }
}

TEST_CASE("tree: query validation enforces the connectivity rule") {
  const auto inst = tree::generate({3, 3, 5, 40, 12, 8});
  tree::Frontier frontier(inst);
  // root is pre-revealed, not re-queryable
  CHECK(frontier.validate(inst.root).has_value());
  // some node two hops away is not available yet
  const NodeId gateway = frontier.available()[0];
  const NodeId deep = [&] {
    for (NodeId nb : inst.adjacency[static_cast<std::size_t>(gateway)]) {
      if (nb != inst.root) return nb;
    }
    return NodeId{-1};
  }();
  CHECK(frontier.validate(deep).has_value());
  CHECK(!frontier.validate(gateway).has_value());
  auto [v, fresh] = frontier.query(gateway, 1);
  (void)v;
  // now the gateway's children opened up and re-query is invalid
  CHECK(frontier.validate(gateway).has_value());
  CHECK(!frontier.validate(deep).has_value());
  CHECK(std::find(fresh.begin(), fresh.end(), deep) != fresh.end());
}

TEST_CASE("tree: queried set stays connected through an episode") {
  const auto inst = tree::generate({2, 2, 3, 20, 10, 9});
  tree::Frontier frontier(inst);
  Rng rng(31);
  std::set<NodeId> queried{inst.root};
  for (int round = 1; round <= 60; ++round) {
    const auto& avail = frontier.available();
    if (avail.empty()) break;
    const NodeId pick =
        avail[static_cast<std::size_t>(rng.below(avail.size()))];
    // connectivity: the pick must touch the queried set
    bool touches = false;
    for (NodeId nb : inst.adjacency[static_cast<std::size_t>(pick)]) {
      touches |= queried.count(nb) > 0;
    }
    CHECK(touches);
    frontier.query(pick, round);
    queried.insert(pick);
  }
}

TEST_CASE("tree: availability ordering, fresh nodes first, recency else") {
  const auto inst = tree::generate({1, 1, 5, 10, 8, 10});
  tree::Frontier frontier(inst);
  Rng rng(5);

  const NodeId gateway = frontier.available()[0];
  auto [v1, fresh1] = frontier.query(gateway, 1);
  (void)v1;
  REQUIRE(fresh1.size() == 5);  // fanout chains hang off the gateway
  auto order = tree::availability_order(frontier, fresh1, rng);
  CHECK(order.size() == 5);
  CHECK(std::set<NodeId>(order.begin(), order.end()) ==
        std::set<NodeId>(fresh1.begin(), fresh1.end()));

  // re-query ordering with no fresh nodes: most recent first
  auto full = tree::availability_order(frontier, {}, rng);
  CHECK(full.size() == frontier.available().size());
  for (std::size_t i = 1; i < full.size(); ++i) {
    CHECK(frontier.available_since(full[i - 1]) >=
          frontier.available_since(full[i]));
  }
}

TEST_CASE("tree: id permutation hides structure but preserves values") {
  const auto a = tree::generate({3, 3, 5, 40, 12, 21});
  const auto b = tree::generate({3, 3, 5, 40, 12, 22});
  std::multiset<int> va(a.values.begin(), a.values.end());
  std::multiset<int> vb(b.values.begin(), b.values.end());
  CHECK(va == vb);  // same structural multiset under any permutation
  CHECK(a.id_of_structural != b.id_of_structural);
}

// --------------------------------------------------------------- maxsat ---

TEST_CASE("sat: evaluated instance shape and construction guarantee") {
  const auto inst = presets::make("sat-main").as_sat();
  CHECK(inst.n == 15);
  CHECK(inst.m == 120);
  CHECK(inst.w_gold == 80);
  CHECK(inst.gold_vars.size() == 4);
  CHECK(maxsat::count_satisfied(inst, inst.x_star) == inst.m);
}

TEST_CASE("sat: flipping one gold variable costs exactly w_gold") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const auto params =
        presets::random_sat_params(rng, static_cast<std::uint64_t>(500 + i));
    const auto inst = maxsat::generate(params);
    CHECK(maxsat::count_satisfied(inst, inst.x_star) == inst.m);
    for (int gv : inst.gold_vars) {
      auto flipped = inst.x_star;
      flipped[static_cast<std::size_t>(gv)] ^= 1;
      CHECK(maxsat::count_satisfied(inst, flipped) == inst.m - inst.w_gold);
    }
  }
}

TEST_CASE("sat: complement of x* satisfies nothing") {
  const auto inst = presets::make("sat-main").as_sat();
  auto comp = inst.x_star;
  for (auto& b : comp) b ^= 1;
  CHECK(maxsat::count_satisfied(inst, comp) == 0);
}

TEST_CASE("sat: w_gold == m degenerates to an all-or-nothing score") {
  const auto inst = maxsat::generate({10, 30, 3, 2, 30, 6});
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint8_t> x(10);
    for (auto& b : x) b = rng.coin();
    const int score = maxsat::count_satisfied(inst, x);
    CHECK((score == 0 || score == 30));
  }
}

TEST_CASE("sat: gold variables appear in no other clause") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto inst = maxsat::generate(
        presets::random_sat_params(rng, static_cast<std::uint64_t>(900 + i)));
    const std::set<int> gold(inst.gold_vars.begin(), inst.gold_vars.end());
    for (std::size_t c = static_cast<std::size_t>(inst.w_gold);
         c < inst.clauses.size(); ++c) {
      std::set<int> vars;
      for (const auto& lit : inst.clauses[c]) {
        CHECK(gold.count(lit.var) == 0);
        vars.insert(lit.var);
      }
      // distinct variables within a clause
      CHECK(vars.size() == inst.clauses[c].size());
    }
  }
}

TEST_CASE("sat: gold-clause hit rate across random assignments is 2^-k_gold") {
  const auto inst = presets::make("sat-main").as_sat();
  Rng rng(123);
  const int trials = 100000;
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    std::vector<std::uint8_t> x(static_cast<std::size_t>(inst.n));
    for (auto& b : x) b = rng.coin();
    // satisfied gold clause <=> score >= w_gold (others can add at most
    // m - w_gold, and missing gold caps the score at m - w_gold)
    if (maxsat::count_satisfied(inst, x) >= inst.w_gold) ++hits;
  }
  const double p = 1.0 / 16.0;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(static_cast<double>(hits) / trials - p) <= 3.0 * sigma);
}

TEST_CASE("sat: score bounds and wrong-length validation") {
  const auto inst = presets::make("sat-main").as_sat();
  CHECK(maxsat::validate(inst, std::vector<std::uint8_t>(14, 0)).has_value());
  CHECK(maxsat::validate(inst, std::vector<std::uint8_t>(16, 0)).has_value());
  CHECK(!maxsat::validate(inst, std::vector<std::uint8_t>(15, 0)).has_value());
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::uint8_t> x(15);
    for (auto& b : x) b = rng.coin();
    const int score = maxsat::count_satisfied(inst, x);
    CHECK(score >= 0);
    CHECK(score <= inst.m);
  }
}

TEST_CASE("sat: infeasible parameters are rejected") {
  CHECK_THROWS_AS(maxsat::generate({5, 10, 4, 2, 5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(maxsat::generate({15, 10, 4, 2, 20, 1}),
                  std::invalid_argument);
}

TEST_CASE("sat: seed reproducibility") {
  const auto a = maxsat::generate({15, 120, 4, 2, 80, 42});
  const auto b = maxsat::generate({15, 120, 4, 2, 80, 42});
  CHECK(a.x_star == b.x_star);
  CHECK(a.gold_vars == b.gold_vars);
  REQUIRE(a.clauses.size() == b.clauses.size());
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    REQUIRE(a.clauses[i].size() == b.clauses[i].size());
    for (std::size_t j = 0; j < a.clauses[i].size(); ++j) {
      CHECK(a.clauses[i][j].var == b.clauses[i][j].var);
      CHECK(a.clauses[i][j].positive == b.clauses[i][j].positive);
    }
  }
}
