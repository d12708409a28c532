#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "seekbench/agent.hpp"
#include "seekbench/instance_io.hpp"
#include "seekbench/protocol.hpp"

namespace seekbench::harness {

// Invalid queries never consume budget. The first `silent_retries` get a
// contentless retry prompt; the next `feedback_retries` get an
// explanation; one more invalid query ends the episode.
struct RetryPolicy {
  int silent_retries = 20;
  int feedback_retries = 5;
};

struct InterventionSpec {
  int parallel_p = 1;
  int summary_s = 1;  // 1 = no mid-episode hand-off
};

enum class Termination {
  completed,
  retry_exhausted,
  agent_crash,
  timeout,
  env_exhausted,  // no legal query left (tree smaller than the budget)
};

const char* termination_name(Termination t);

struct EpisodeConfig {
  int budget = 0;
  std::uint64_t seed = 0;
  RetryPolicy retry;
  int summary_s = 1;
  std::string agent_id;
  nlohmann::ordered_json agent_params = nlohmann::ordered_json::object();
};

struct EpisodeLog {
  std::string task;
  std::string instance_id;
  std::string instance_digest;
  std::string agent_id;
  nlohmann::ordered_json agent_params;
  std::uint64_t seed = 0;
  int budget = 0;
  InterventionSpec intervention;
  std::vector<StepRecord> steps;
  std::vector<int> summary_rounds;  // valid-round indices of hand-offs
  int silent_retries_used = 0;
  int feedback_retries_used = 0;
  double raw_reward = 0.0;
  double normalized_reward = 0.0;
  Termination termination = Termination::completed;
  std::vector<TranscriptEntry> transcript;
};

nlohmann::ordered_json episode_log_to_json(const EpisodeLog& log);
EpisodeLog episode_log_from_json(const nlohmann::json& doc);

// Per-episode oracle wrapper: validation plus feedback, holding whatever
// per-episode state the task needs (the tree frontier).
class EnvSession {
 public:
  explicit EnvSession(const AnyInstance& instance);

  std::optional<std::string> validate(const Query& query) const;
  Feedback apply(const Query& query, int round);
  bool has_moves() const;
  const tree::Frontier* frontier() const { return frontier_.get(); }

 private:
  const AnyInstance* instance_;
  std::unique_ptr<tree::Frontier> frontier_;  // tree only
};

// Runs one episode: exactly `budget` valid oracle rounds unless the agent
// fails or exhausts its retry allowance. Summary hand-offs (s > 1) are
// delivered to conversational agents after rounds floor(N/s), 2*floor(N/s),
// ...; the final segment absorbs the remainder.
EpisodeLog run_episode(const AnyInstance& instance, Agent& agent,
                       const EpisodeConfig& config);

using AgentFactory = std::function<std::unique_ptr<Agent>(
    int thread_index, int thread_budget, std::uint64_t thread_seed)>;

struct ParallelResult {
  double reward = 0.0;  // max over the per-thread normalized rewards
  std::vector<EpisodeLog> logs;
};

// Splits budget N into p independent episodes of N/p with derived seeds.
// p must divide N unless allow_remainder (then the remainder is dropped).
ParallelResult run_parallel(const AnyInstance& instance,
                            const AgentFactory& factory, int budget, int p,
                            std::uint64_t seed, const EpisodeConfig& base,
                            bool allow_remainder = false);

// Expected best-of-p over all size-p subsets of `rewards`, via the order
// statistics identity (sort ascending; the i-th order statistic is the
// subset max with probability C(i-1, p-1)/C(n, p)).
double pooled_parallel_estimate(std::vector<double> rewards, int p);

// Union-replay helpers for the no-gain property: the set of queries made
// by parallel threads, replayable by a single thread within budget N.
std::vector<Query> union_queries(const std::vector<EpisodeLog>& logs);
// Tree needs an order that keeps the queried set connected: BFS over the
// union from the root.
std::vector<Query> tree_union_replay_order(const tree::Instance& instance,
                                           const std::vector<EpisodeLog>& logs);

void append_log_line(std::ostream& out, const EpisodeLog& log);
std::vector<EpisodeLog> load_log_file(const std::filesystem::path& path);

}  // namespace seekbench::harness
