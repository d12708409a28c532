#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "seekbench/envcore.hpp"
#include "seekbench/rng.hpp"

using namespace seekbench;

TEST_CASE("rng: identical seeds give identical streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng: derive is a pure function and separates streams") {
  CHECK(Rng::derive(7, 0) == Rng::derive(7, 0));
  CHECK(Rng::derive(7, 0) != Rng::derive(7, 1));
  CHECK(Rng::derive(7, 0) != Rng::derive(8, 0));
}

TEST_CASE("rng: uniform stays in range, below is bounded") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(2.0, 5.0);
    CHECK(x >= 2.0);
    CHECK(x < 5.0);
    CHECK(rng.below(7) < 7);
  }
}

TEST_CASE("rng: uniform_int covers the full inclusive range") {
  Rng rng(9);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(rng.uniform_int(1, 5));
  CHECK(seen == std::set<std::int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("rng: shuffle permutes without losing elements") {
  Rng rng(5);
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
  auto copy = v;
  rng.shuffle(v);
  std::sort(v.begin(), v.end());
  CHECK(v == copy);
}

TEST_CASE("record_step: first query, counting") {
  auto s0 = EpisodeState::fresh(10, 1);
  auto s1 = record_step(s0, Query{HillQuery{2.0}}, Feedback{3.5, {}});
  CHECK(s1.history.size() == 1);
  CHECK(s1.budget.used == 1);
  CHECK(s1.best_reward_raw == 3.5);
  // the original state is untouched
  CHECK(s0.budget.used == 0);
  CHECK(s0.history.empty());
}

TEST_CASE("record_step: best is monotone under worse feedback") {
  auto s = EpisodeState::fresh(10, 1);
  s = record_step(s, Query{HillQuery{1.0}}, Feedback{0.7, {}});
  s = record_step(s, Query{HillQuery{2.0}}, Feedback{0.5, {}});
  CHECK(s.best_reward_raw == 0.7);
  CHECK(s.history.back().best_so_far == 0.7);
}

TEST_CASE("record_step: 48-step replay tracks the fold-max oracle") {
  // Independent oracle: fold over the trace with a max accumulator.
  Rng rng(17);
  std::vector<double> values;
  for (int i = 0; i < 48; ++i) values.push_back(rng.uniform(0.0, 10.0));
  double fold_max = values[0];
  for (double v : values) fold_max = std::max(fold_max, v);

  auto s = EpisodeState::fresh(48, 17);
  for (double v : values) {
    s = record_step(s, Query{HillQuery{v}}, Feedback{v, {}});
  }
  CHECK(s.budget.used == 48);
  CHECK(s.history.size() == 48);
  CHECK(s.best_reward_raw == fold_max);
}

TEST_CASE("record_step: refuses steps past the budget") {
  auto s = EpisodeState::fresh(1, 1);
  s = record_step(s, Query{HillQuery{1.0}}, Feedback{1.0, {}});
  CHECK_THROWS_AS(record_step(s, Query{HillQuery{1.0}}, Feedback{1.0, {}}),
                  std::logic_error);
}

TEST_CASE("record_step: best-so-far sequence is non-decreasing") {
  Rng rng(23);
  auto s = EpisodeState::fresh(64, 23);
  for (int i = 0; i < 64; ++i) {
    const double v = rng.uniform(-1.0, 1.0);
    s = record_step(s, Query{HillQuery{v}}, Feedback{v, {}});
  }
  for (std::size_t i = 1; i < s.history.size(); ++i) {
    CHECK(s.history[i].best_so_far >= s.history[i - 1].best_so_far);
  }
}

TEST_CASE("normalize: exact endpoints") {
  CHECK(normalize(45.0, 45.0).value == 1.0);
  CHECK(normalize(0.0, 45.0).value == 0.0);
}

TEST_CASE("normalize: rejects bad inputs") {
  CHECK_THROWS_AS(normalize(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(normalize(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(normalize(2.0, 1.0), std::logic_error);
}

TEST_CASE("normalize: clamps float dust but keeps value in [0,1]") {
  const double max = 20.991;
  const auto r = normalize(max * (1.0 + 1e-12), max);
  CHECK(r.value == 1.0);
}
