#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "seekbench/analysis.hpp"
#include "seekbench/theory.hpp"

using namespace seekbench;
using namespace seekbench::analysis;
using namespace seekbench::theory;

TEST_CASE("mean_reward: basics and the empty-set error") {
  RunSet rs;
  rs.rewards = {0.5, 0.5};
  CHECK(mean_reward(rs) == 0.5);
  rs.rewards = {1.0};
  CHECK(mean_reward(rs) == 1.0);
  rs.rewards.clear();
  CHECK_THROWS_AS(mean_reward(rs), std::invalid_argument);
}

TEST_CASE("bootstrap: constant rewards have zero spread") {
  CHECK(bootstrap_stderr(std::vector<double>(50, 0.7), 2000, 1) == 0.0);
}

TEST_CASE("bootstrap: half zeros, half ones, n=100 lands near s/sqrt(n)") {
  std::vector<double> rewards(100);
  for (int i = 0; i < 50; ++i) rewards[static_cast<std::size_t>(i)] = 1.0;
  const double se = bootstrap_stderr(rewards, 20000, 7);
  // analytic: sd = 0.5025, se = 0.05025; bootstrap within 10%
  const double analytic = 0.502518 / 10.0;
  CHECK(std::abs(se - analytic) / analytic < 0.10);
}

TEST_CASE("bootstrap: deterministic given (B, seed), stable across reseeds") {
  std::vector<double> rewards;
  Rng rng(3);
  for (int i = 0; i < 200; ++i) rewards.push_back(rng.next_double());
  CHECK(bootstrap_stderr(rewards, 5000, 42) ==
        bootstrap_stderr(rewards, 5000, 42));
  const double a = bootstrap_stderr(rewards, 40000, 1);
  const double b = bootstrap_stderr(rewards, 40000, 2);
  CHECK(std::abs(a - b) / a < 0.02);
}

TEST_CASE("bootstrap: degenerate inputs rejected") {
  CHECK_THROWS_AS(bootstrap_stderr({1.0}, 100, 1), std::invalid_argument);
}

TEST_CASE("relative delta: published examples within a percentage point") {
  // (Printed table cells are rounded; the delta computed from them must
  // land within +-1pp of the printed delta.)
  CHECK(std::abs(relative_delta_percent(0.52, 0.33) - 59.0) <= 1.0);
  CHECK(relative_delta_percent(0.4, 0.4) == 0.0);
  CHECK(std::abs(relative_delta_percent(0.85, 0.91) - (-7.0)) <= 1.0);
  CHECK_THROWS_AS(relative_delta_percent(1.0, 0.0), std::domain_error);
}

TEST_CASE("rounding: two decimals, halves away from zero") {
  CHECK(round_half_up(0.125, 2) == 0.13);
  CHECK(round_half_up(0.124, 2) == 0.12);
  CHECK(round_half_up(-0.125, 2) == -0.13);
  CHECK(round_half_up(57.5, 0) == 58.0);
}

TEST_CASE("scaling series: sorted by budget with per-point stderr") {
  std::map<int, std::vector<double>> data;
  data[48] = {0.9, 1.0, 0.95, 0.9};
  data[12] = {0.4, 0.5, 0.45, 0.5};
  data[36] = {0.8, 0.85, 0.9, 0.8};
  const auto series = scaling_series(data, 2000, 3);
  REQUIRE(series.size() == 3);
  CHECK(series[0].budget == 12);
  CHECK(series[1].budget == 36);
  CHECK(series[2].budget == 48);
  CHECK(series[0].mean == doctest::Approx(0.4625));
  for (const auto& pt : series) CHECK(pt.stderr_value > 0.0);
}

TEST_CASE("scaling series: a single budget is a single point") {
  std::map<int, std::vector<double>> data;
  data[36] = {0.5, 0.7};
  CHECK(scaling_series(data).size() == 1);
}

TEST_CASE("pooling consistency: pooled p=1 equals the mean exactly") {
  Rng rng(8);
  RunSet rs;
  for (int i = 0; i < 123; ++i) rs.rewards.push_back(rng.next_double());
  CHECK(harness::pooled_parallel_estimate(rs.rewards, 1) ==
        doctest::Approx(mean_reward(rs)).epsilon(1e-13));
}

// ------------------------------------------------------------- theory ---

TEST_CASE("solve_root: closed form 2 - 2^alpha for p=2") {
  for (int i = 1; i <= 19; ++i) {
    const double alpha = 0.05 * i;
    CHECK(std::abs(solve_root(2, alpha) - (2.0 - std::pow(2.0, alpha))) <
          1e-10);
  }
}

TEST_CASE("solve_root: root is a genuine sign change of h") {
  for (const auto& [p, alpha] : std::vector<std::pair<int, double>>{
           {3, 0.5}, {4, 0.25}, {2, 0.9}, {7, 0.7}}) {
    const double y = solve_root(p, alpha);
    const double slope = std::pow(p, alpha);
    auto h = [&](double v) { return 1.0 - std::pow(1.0 - v, p) - slope * v; };
    CHECK(std::abs(h(y)) < 1e-10);
    CHECK(h(y * 0.5) > 0.0);
    if (2 * y <= 1.0) CHECK(h(std::min(1.0, 2 * y)) <= 0.0);
  }
}

TEST_CASE("solve_root: alpha near 1 pushes the root toward 0") {
  CHECK(solve_root(2, 0.999) < 0.002);
}

TEST_CASE("budget threshold: worked example p=2, alpha=0.5, c=1") {
  const auto t = budget_threshold({1.0, 0.5}, 2);
  const double y = 2.0 - std::sqrt(2.0);
  CHECK(t.v_p == doctest::Approx(2.0 * y * y).epsilon(1e-9));
  CHECK(t.v_p == doctest::Approx(0.6863).epsilon(1e-3));
  CHECK(t.clamped == t.v_p);
}

TEST_CASE("budget threshold: tiny c sends v_p past the domain") {
  const auto t = budget_threshold({0.01, 0.5}, 2);
  CHECK(t.v_p > 1.0);
  CHECK(t.clamped == 1.0);
}

TEST_CASE("benefit condition: sign structure around the threshold") {
  Rng rng(33);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int p = 2 + static_cast<int>(rng.below(5));
    const double alpha = rng.uniform(0.05, 0.95);
    const double c = rng.uniform(0.05, 1.0);
    const PowerLawModel model{c, alpha};
    const auto t = budget_threshold(model, p);
    if (t.v_p / 2 <= 1.0) {
      CHECK(benefit_condition(model, t.v_p / 2, p));
      ++checked;
    }
    if (t.v_p * 1.01 <= 1.0) {
      CHECK(!benefit_condition(model, t.v_p * 1.01, p));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("benefit condition: false exactly at the threshold") {
  const PowerLawModel model{1.0, 0.5};
  const auto t = budget_threshold(model, 2);
  CHECK(!benefit_condition(model, t.v_p, 2));
  CHECK(benefit_condition(model, t.v_p - 1e-6, 2));
}

TEST_CASE("benefit condition: tiny budgets always benefit from splitting") {
  for (int p = 2; p <= 6; ++p) {
    CHECK(benefit_condition({1.0, 0.5}, 1e-6, p));
  }
}

TEST_CASE("fit_power_law recovers known parameters") {
  const PowerLawModel truth{0.4, 0.63};
  std::vector<std::pair<double, double>> pts;
  for (int i = 1; i <= 20; ++i) {
    const double x = i / 20.0;
    pts.emplace_back(x, truth.q(x));
  }
  const auto fit = fit_power_law(pts);
  CHECK(fit.alpha == doctest::Approx(truth.alpha).epsilon(1e-9));
  CHECK(fit.c == doctest::Approx(truth.c).epsilon(1e-9));
}

TEST_CASE("group_logs splits by configuration key") {
  harness::EpisodeLog a;
  a.task = "hill";
  a.instance_id = "hill-main";
  a.agent_id = "baseline";
  a.budget = 36;
  a.normalized_reward = 0.5;
  harness::EpisodeLog b = a;
  b.budget = 48;
  b.normalized_reward = 0.7;
  harness::EpisodeLog c = a;
  c.normalized_reward = 0.9;
  const auto sets = group_logs({a, b, c});
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].key.budget == 36);
  CHECK(sets[0].rewards.size() == 2);
  CHECK(sets[1].key.budget == 48);
}
