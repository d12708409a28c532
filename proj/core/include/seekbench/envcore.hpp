#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace seekbench {

using NodeId = int;

// Task-specific query payloads. A value of one of these types has already
// passed shape validation (range/adjacency checks live in the envs).
struct HillQuery {
  double x = 0.0;
};
struct TreeQuery {
  NodeId node = 0;
};
struct SatQuery {
  std::vector<std::uint8_t> bits;  // length n, values 0/1
};

using Query = std::variant<HillQuery, TreeQuery, SatQuery>;

// Oracle feedback for one valid round. `value` is the raw reward signal
// (f(x), node value, satisfied-clause count). `new_nodes` is tree-only:
// nodes that became available because of this query, in the order they
// were exposed (unshuffled; presentation order is the renderer's job).
struct Feedback {
  double value = 0.0;
  std::vector<NodeId> new_nodes;
};

struct Budget {
  int total = 0;
  int used = 0;

  int remaining() const { return total - used; }
  bool exhausted() const { return used >= total; }
};

struct StepRecord {
  int index = 0;  // 1-based round number
  Query query;
  Feedback feedback;
  double best_so_far = 0.0;
};

// Episode state is a value: record_step returns a new state rather than
// mutating, so any prefix of an episode is a first-class object that can
// be logged, compared, or replayed.
struct EpisodeState {
  Budget budget;
  std::vector<StepRecord> history;
  double best_reward_raw = 0.0;
  std::uint64_t seed = 0;

  static EpisodeState fresh(int total_budget, std::uint64_t seed) {
    EpisodeState s;
    s.budget = Budget{total_budget, 0};
    s.seed = seed;
    return s;
  }
};

inline EpisodeState record_step(const EpisodeState& state, const Query& query,
                                const Feedback& feedback) {
  if (state.budget.exhausted()) {
    throw std::logic_error("record_step: budget exhausted");
  }
  EpisodeState next = state;
  next.budget.used += 1;
  const double best = next.history.empty()
                          ? feedback.value
                          : std::max(state.best_reward_raw, feedback.value);
  next.best_reward_raw = best;
  next.history.push_back(
      StepRecord{next.budget.used, query, feedback, best});
  return next;
}

struct NormalizedReward {
  double value = 0.0;
};

// raw / instance_max, with a guard against a wrong instance-max
// computation. Tiny float excess from the max finder's own tolerance is
// clamped; anything beyond that is a real bug upstream.
inline NormalizedReward normalize(double raw, double instance_max) {
  if (!(instance_max > 0.0)) {
    throw std::domain_error("normalize: instance_max must be positive");
  }
  const double slack = 1e-7 * (1.0 + instance_max);
  if (raw > instance_max + slack) {
    throw std::logic_error("normalize: raw reward exceeds instance maximum");
  }
  double v = raw / instance_max;
  if (v > 1.0) v = 1.0;
  if (v < 0.0) v = 0.0;
  return NormalizedReward{v};
}

}  // namespace seekbench
