#include "seekbench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "seekbench/rng.hpp"

namespace seekbench::analysis {

std::vector<RunSet> group_logs(const std::vector<harness::EpisodeLog>& logs) {
  std::map<RunKey, RunSet> groups;
  for (const auto& log : logs) {
    RunKey key{log.task,   log.instance_id,
               log.agent_id, log.budget,
               log.intervention.parallel_p, log.intervention.summary_s};
    auto& rs = groups[key];
    rs.key = key;
    rs.rewards.push_back(log.normalized_reward);
    rs.seeds.push_back(log.seed);
  }
  std::vector<RunSet> out;
  out.reserve(groups.size());
  for (auto& [key, rs] : groups) out.push_back(std::move(rs));
  return out;
}

double mean_reward(const RunSet& runs) {
  if (runs.rewards.empty()) {
    throw std::invalid_argument("mean_reward: empty run set");
  }
  return std::accumulate(runs.rewards.begin(), runs.rewards.end(), 0.0) /
         static_cast<double>(runs.rewards.size());
}

double bootstrap_stderr(const std::vector<double>& rewards, int resamples,
                        std::uint64_t seed) {
  const std::size_t n = rewards.size();
  if (n < 2) throw std::invalid_argument("bootstrap_stderr: need n >= 2");
  if (resamples < 1) throw std::invalid_argument("bootstrap_stderr: B >= 1");

  Rng rng(seed);
  std::vector<double> means;
  means.reserve(static_cast<std::size_t>(resamples));
  for (int b = 0; b < resamples; ++b) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      total += rewards[static_cast<std::size_t>(rng.below(n))];
    }
    means.push_back(total / static_cast<double>(n));
  }
  const double mean =
      std::accumulate(means.begin(), means.end(), 0.0) /
      static_cast<double>(means.size());
  double ss = 0.0;
  for (double m : means) ss += (m - mean) * (m - mean);
  return std::sqrt(ss / static_cast<double>(means.size()));
}

double relative_delta_percent(double value, double reference) {
  if (!(reference > 0.0)) {
    throw std::domain_error("relative_delta_percent: reference must be > 0");
  }
  return 100.0 * (value - reference) / reference;
}

double round_half_up(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Half away from zero, matching how the tables round.
  return (x >= 0 ? std::floor(x * scale + 0.5) : -std::floor(-x * scale + 0.5)) /
         scale;
}

std::vector<SeriesPoint> scaling_series(
    const std::map<int, std::vector<double>>& rewards_by_budget,
    int resamples, std::uint64_t seed) {
  std::vector<SeriesPoint> out;
  for (const auto& [budget, rewards] : rewards_by_budget) {
    SeriesPoint pt;
    pt.budget = budget;
    pt.mean = std::accumulate(rewards.begin(), rewards.end(), 0.0) /
              static_cast<double>(rewards.size());
    pt.stderr_value =
        rewards.size() >= 2
            ? bootstrap_stderr(rewards, resamples,
                               Rng::derive(seed, static_cast<std::uint64_t>(budget)))
            : 0.0;
    out.push_back(pt);
  }
  // std::map already iterates in budget order; keep the contract explicit.
  std::sort(out.begin(), out.end(),
            [](const SeriesPoint& a, const SeriesPoint& b) {
              return a.budget < b.budget;
            });
  return out;
}

std::string emit_series_tsv(const std::vector<SeriesPoint>& series) {
  std::ostringstream out;
  out << "budget\tmean\tstderr\n";
  for (const auto& pt : series) {
    out << pt.budget << '\t' << round_half_up(pt.mean, 4) << '\t'
        << round_half_up(pt.stderr_value, 4) << '\n';
  }
  return out.str();
}

namespace {

std::string cell(double mean, double se) {
  std::ostringstream out;
  out << round_half_up(mean, 2) << " (" << round_half_up(se, 3) << ")";
  return out.str();
}

}  // namespace

std::string emit_reward_table(const std::vector<RunSet>& runsets) {
  std::vector<int> budgets;
  std::vector<std::pair<std::string, std::string>> rows;  // (agent, instance)
  for (const auto& rs : runsets) {
    if (std::find(budgets.begin(), budgets.end(), rs.key.budget) ==
        budgets.end()) {
      budgets.push_back(rs.key.budget);
    }
    const auto row = std::make_pair(rs.key.agent, rs.key.instance);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
      rows.push_back(row);
    }
  }
  std::sort(budgets.begin(), budgets.end());

  std::ostringstream out;
  out << "agent\tinstance";
  for (int b : budgets) out << "\tN=" << b;
  out << '\n';
  for (const auto& [agent, instance] : rows) {
    out << agent << '\t' << instance;
    for (int b : budgets) {
      const RunSet* match = nullptr;
      for (const auto& rs : runsets) {
        if (rs.key.agent == agent && rs.key.instance == instance &&
            rs.key.budget == b && rs.key.parallel_p == 1 &&
            rs.key.summary_s == 1) {
          match = &rs;
          break;
        }
      }
      if (!match) {
        out << "\t-";
      } else {
        const double se = match->rewards.size() >= 2
                              ? bootstrap_stderr(match->rewards)
                              : 0.0;
        out << '\t' << cell(mean_reward(*match), se);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_pooled_table(const std::vector<RunSet>& runsets,
                              int total_budget, const std::vector<int>& ps) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& rs : runsets) {
    const auto row = std::make_pair(rs.key.agent, rs.key.instance);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
      rows.push_back(row);
    }
  }

  auto find_cell = [&](const std::string& agent, const std::string& instance,
                       int budget) -> const RunSet* {
    for (const auto& rs : runsets) {
      if (rs.key.agent == agent && rs.key.instance == instance &&
          rs.key.budget == budget && rs.key.parallel_p == 1 &&
          rs.key.summary_s == 1) {
        return &rs;
      }
    }
    return nullptr;
  };

  std::ostringstream out;
  out << "agent\tinstance\tp=1";
  for (int p : ps) {
    if (p != 1) out << "\tp=" << p;
  }
  out << '\n';
  for (const auto& [agent, instance] : rows) {
    const RunSet* base = find_cell(agent, instance, total_budget);
    if (!base) continue;
    const double ref = mean_reward(*base);
    out << agent << '\t' << instance << '\t' << round_half_up(ref, 2);
    for (int p : ps) {
      if (p == 1) continue;
      if (total_budget % p != 0) {
        out << "\t-";
        continue;
      }
      const RunSet* split = find_cell(agent, instance, total_budget / p);
      if (!split || static_cast<int>(split->rewards.size()) < p) {
        out << "\t-";
        continue;
      }
      const double pooled =
          harness::pooled_parallel_estimate(split->rewards, p);
      const double delta = relative_delta_percent(pooled, ref);
      out << '\t' << round_half_up(pooled, 2) << " ("
          << (delta >= 0 ? "+" : "") << round_half_up(delta, 0) << "%)";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace seekbench::analysis
