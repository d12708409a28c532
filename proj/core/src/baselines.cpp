#include "seekbench/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seekbench::baselines {

HillBaseline::HillBaseline(HillParams params, int budget, std::uint64_t seed)
    : params_(params), budget_(budget), rng_(seed) {
  if (params.explore_fraction < 0 || params.explore_fraction > 1 ||
      params.window_fraction <= 0) {
    throw std::invalid_argument("HillBaseline: bad parameters");
  }
}

AgentReply HillBaseline::next_query() {
  const double lo = hill::kDomainLo;
  const double hi = hill::kDomainHi;
  const int n_explore =
      static_cast<int>(std::floor(params_.explore_fraction * budget_));
  if (rounds_seen_ < n_explore) {
    const double dx = (hi - lo) / n_explore;
    const double left = lo + rounds_seen_ * dx;
    return AgentReply{Query{HillQuery{rng_.uniform(left, left + dx)}}};
  }
  if (!has_best_) {
    // Exploitation with nothing observed yet (alpha = 0 edge): fall back
    // to a draw over the whole domain.
    return AgentReply{Query{HillQuery{rng_.uniform(lo, hi)}}};
  }
  const double w = (hi - lo) * params_.window_fraction;
  const double x = rng_.uniform(best_x_ - w / 2.0, best_x_ + w / 2.0);
  return AgentReply{Query{HillQuery{std::clamp(x, lo, hi)}}};
}

void HillBaseline::observe(const StepRecord& step) {
  ++rounds_seen_;
  const double x = std::get<HillQuery>(step.query).x;
  if (!has_best_ || step.feedback.value > best_y_) {
    has_best_ = true;
    best_x_ = x;
    best_y_ = step.feedback.value;
  }
}

TreeBaseline::TreeBaseline(TreeParams params, const tree::Instance& instance,
                           std::uint64_t seed)
    : params_(params), instance_(&instance), rng_(seed) {
  if (params.temperature < 0) {
    throw std::invalid_argument("TreeBaseline: negative temperature");
  }
  queried_.assign(static_cast<std::size_t>(instance.node_count), 0);
  queried_[static_cast<std::size_t>(instance.root)] = 1;
  for (NodeId nb :
       instance.adjacency[static_cast<std::size_t>(instance.root)]) {
    frontier_.push_back(nb);
    parent_value_.push_back(0);  // the root's value is known to be 0
  }
}

AgentReply TreeBaseline::next_query() {
  if (frontier_.empty()) {
    throw std::logic_error("TreeBaseline: tree exhausted");
  }
  std::size_t pick = 0;
  if (params_.temperature == 0.0) {
    const int best = *std::max_element(parent_value_.begin(), parent_value_.end());
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < frontier_.size(); ++i) {
      if (parent_value_[i] == best) ties.push_back(i);
    }
    pick = ties[static_cast<std::size_t>(rng_.below(ties.size()))];
  } else {
    const int smax = *std::max_element(parent_value_.begin(), parent_value_.end());
    std::vector<double> weights(frontier_.size());
    double total = 0.0;
    for (std::size_t i = 0; i < frontier_.size(); ++i) {
      weights[i] = std::exp(static_cast<double>(parent_value_[i] - smax) /
                            params_.temperature);
      total += weights[i];
    }
    const double r = rng_.next_double() * total;
    double acc = 0.0;
    pick = frontier_.size() - 1;
    for (std::size_t i = 0; i < frontier_.size(); ++i) {
      acc += weights[i];
      if (r < acc) {
        pick = i;
        break;
      }
    }
  }
  return AgentReply{Query{TreeQuery{frontier_[pick]}}};
}

void TreeBaseline::observe(const StepRecord& step) {
  const NodeId node = std::get<TreeQuery>(step.query).node;
  const int value = static_cast<int>(step.feedback.value);
  queried_[static_cast<std::size_t>(node)] = 1;
  for (std::size_t i = 0; i < frontier_.size(); ++i) {
    if (frontier_[i] == node) {
      frontier_.erase(frontier_.begin() + static_cast<std::ptrdiff_t>(i));
      parent_value_.erase(parent_value_.begin() +
                          static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  for (NodeId nb : step.feedback.new_nodes) {
    if (!queried_[static_cast<std::size_t>(nb)]) {
      frontier_.push_back(nb);
      parent_value_.push_back(value);
    }
  }
}

SatBaseline::SatBaseline(SatParams params, int num_vars, int budget,
                         std::uint64_t seed)
    : params_(params), n_(num_vars), budget_(budget), rng_(seed) {
  if (params.explore_fraction < 0 || params.explore_fraction > 1) {
    throw std::invalid_argument("SatBaseline: bad explore fraction");
  }
}

AgentReply SatBaseline::next_query() {
  const int n_explore =
      static_cast<int>(std::floor(params_.explore_fraction * budget_));
  SatQuery q;
  q.bits.resize(static_cast<std::size_t>(n_));
  if (rounds_seen_ < n_explore || !has_best_) {
    for (auto& bit : q.bits) bit = rng_.coin() ? 1 : 0;
    return AgentReply{Query{std::move(q)}};
  }
  q.bits = best_;
  const auto flip = static_cast<std::size_t>(rng_.below(static_cast<std::uint64_t>(n_)));
  q.bits[flip] ^= 1;
  return AgentReply{Query{std::move(q)}};
}

void SatBaseline::observe(const StepRecord& step) {
  ++rounds_seen_;
  if (!has_best_ || step.feedback.value > best_y_) {
    has_best_ = true;
    best_ = std::get<SatQuery>(step.query).bits;
    best_y_ = step.feedback.value;
  }
}

std::unique_ptr<Agent> make_baseline(const AnyInstance& instance, int budget,
                                     std::uint64_t seed) {
  return make_baseline(instance, budget, seed, HillParams{}, TreeParams{},
                       SatParams{});
}

std::unique_ptr<Agent> make_baseline(const AnyInstance& instance, int budget,
                                     std::uint64_t seed, HillParams hill_p,
                                     TreeParams tree_p, SatParams sat_p) {
  switch (instance.task()) {
    case Task::hill:
      return std::make_unique<HillBaseline>(hill_p, budget, seed);
    case Task::tree:
      return std::make_unique<TreeBaseline>(tree_p, instance.as_tree(), seed);
    case Task::sat:
      return std::make_unique<SatBaseline>(sat_p, instance.as_sat().n, budget,
                                           seed);
  }
  throw std::logic_error("make_baseline: unreachable");
}

ReplayAgent::ReplayAgent(std::vector<Query> queries)
    : queries_(std::move(queries)) {
  if (queries_.empty()) {
    throw std::invalid_argument("ReplayAgent: empty query list");
  }
}

AgentReply ReplayAgent::next_query() {
  if (at_ < queries_.size()) return AgentReply{queries_[at_++]};
  return AgentReply{queries_.back()};
}

}  // namespace seekbench::baselines
