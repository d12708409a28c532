#pragma once

#include <map>
#include <string>
#include <vector>

#include "seekbench/harness.hpp"

namespace seekbench::analysis {

// One experiment cell: every episode sharing a configuration.
struct RunKey {
  std::string task;
  std::string instance;
  std::string agent;
  int budget = 0;
  int parallel_p = 1;
  int summary_s = 1;

  auto operator<=>(const RunKey&) const = default;
};

struct RunSet {
  RunKey key;
  std::vector<double> rewards;  // normalized, in [0,1]
  std::vector<std::uint64_t> seeds;
};

std::vector<RunSet> group_logs(const std::vector<harness::EpisodeLog>& logs);

double mean_reward(const RunSet& runs);

inline constexpr int kDefaultBootstrapResamples = 10000;

// Standard deviation of B resampled means (resampling with replacement).
double bootstrap_stderr(const std::vector<double>& rewards,
                        int resamples = kDefaultBootstrapResamples,
                        std::uint64_t seed = 0);

// Signed percent change of `value` against `reference`.
double relative_delta_percent(double value, double reference);

// Table rounding: two decimals for rewards, whole percents for deltas,
// halves away from zero.
double round_half_up(double x, int decimals);

struct SeriesPoint {
  int budget = 0;
  double mean = 0.0;
  double stderr_value = 0.0;
};

// (N, mean, stderr) triples sorted by N, ready for plotting.
std::vector<SeriesPoint> scaling_series(
    const std::map<int, std::vector<double>>& rewards_by_budget,
    int resamples = kDefaultBootstrapResamples, std::uint64_t seed = 0);

std::string emit_series_tsv(const std::vector<SeriesPoint>& series);

// Reward table: one row per (agent, instance), one column per budget,
// cells "mean (stderr)". Tab-separated.
std::string emit_reward_table(const std::vector<RunSet>& runsets);

// Best-of-p pooling columns computed from single-thread runsets whose
// budget is N/p, with relative deltas against the single-thread cell at
// budget N. One row per (agent, instance).
std::string emit_pooled_table(const std::vector<RunSet>& runsets,
                              int total_budget, const std::vector<int>& ps);

}  // namespace seekbench::analysis
