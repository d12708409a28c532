#pragma once

#include <memory>
#include <vector>

#include "seekbench/agent.hpp"
#include "seekbench/instance_io.hpp"
#include "seekbench/rng.hpp"

namespace seekbench::baselines {

struct HillParams {
  double explore_fraction = 0.8;  // alpha
  double window_fraction = 0.05;  // beta; window width = span * beta
};

struct TreeParams {
  double temperature = 4.0;  // tau; 0 = greedy argmax, uniform ties
};

struct SatParams {
  double explore_fraction = 0.5;  // alpha
};

// Stratified sampling over [0,10] for the first floor(alpha*N) rounds,
// then uniform draws from a window around the incumbent best, clamped to
// the domain. Ties in the incumbent go to the earliest round.
class HillBaseline : public Agent {
 public:
  HillBaseline(HillParams params, int budget, std::uint64_t seed);
  AgentReply next_query() override;
  void observe(const StepRecord& step) override;

 private:
  HillParams params_;
  int budget_;
  int rounds_seen_ = 0;
  bool has_best_ = false;
  double best_x_ = 0.0;
  double best_y_ = 0.0;
  Rng rng_;
};

// Softmax over the observed value of each candidate's parent, temperature
// tau. Candidates are exactly the unqueried nodes whose parent has been
// queried (the frontier of the explored component).
class TreeBaseline : public Agent {
 public:
  TreeBaseline(TreeParams params, const tree::Instance& instance,
               std::uint64_t seed);
  AgentReply next_query() override;
  void observe(const StepRecord& step) override;

 private:
  TreeParams params_;
  const tree::Instance* instance_;
  std::vector<int> parent_value_;        // score per frontier slot
  std::vector<NodeId> frontier_;
  std::vector<std::uint8_t> queried_;
  Rng rng_;
};

// Uniform random assignments while exploring, then single-bit flips of
// the incumbent best (earliest-round ties).
class SatBaseline : public Agent {
 public:
  SatBaseline(SatParams params, int num_vars, int budget, std::uint64_t seed);
  AgentReply next_query() override;
  void observe(const StepRecord& step) override;

 private:
  SatParams params_;
  int n_;
  int budget_;
  int rounds_seen_ = 0;
  bool has_best_ = false;
  std::vector<std::uint8_t> best_;
  double best_y_ = 0.0;
  Rng rng_;
};

// The per-task default agent, optionally with overridden parameters.
std::unique_ptr<Agent> make_baseline(const AnyInstance& instance, int budget,
                                     std::uint64_t seed);
std::unique_ptr<Agent> make_baseline(const AnyInstance& instance, int budget,
                                     std::uint64_t seed, HillParams hill,
                                     TreeParams tree, SatParams sat);

// Replays a fixed query list; used for union-replay checks and protocol
// round-trip tests. When the list runs out it repeats the last query
// (hill/sat re-queries are valid rounds).
class ReplayAgent : public Agent {
 public:
  explicit ReplayAgent(std::vector<Query> queries);
  AgentReply next_query() override;

 private:
  std::vector<Query> queries_;
  std::size_t at_ = 0;
};

}  // namespace seekbench::baselines
