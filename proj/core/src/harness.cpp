#include "seekbench/harness.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <stdexcept>

namespace seekbench::harness {

using nlohmann::json;
using nlohmann::ordered_json;

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::retry_exhausted: return "retry_exhausted";
    case Termination::agent_crash: return "agent_crash";
    case Termination::timeout: return "timeout";
    case Termination::env_exhausted: return "env_exhausted";
  }
  return "?";
}

namespace {

Termination termination_from_name(const std::string& name) {
  for (Termination t :
       {Termination::completed, Termination::retry_exhausted,
        Termination::agent_crash, Termination::timeout,
        Termination::env_exhausted}) {
    if (name == termination_name(t)) return t;
  }
  throw std::invalid_argument("unknown termination: " + name);
}

ordered_json query_to_json(const Query& q) {
  if (const auto* h = std::get_if<HillQuery>(&q)) {
    return ordered_json{{"x", h->x}};
  }
  if (const auto* t = std::get_if<TreeQuery>(&q)) {
    return ordered_json{{"node", t->node}};
  }
  const auto& s = std::get<SatQuery>(q);
  std::string bits;
  bits.reserve(s.bits.size());
  for (auto b : s.bits) bits += b ? '1' : '0';
  return ordered_json{{"bits", bits}};
}

Query query_from_json(const json& j, const std::string& task) {
  if (task == "hill") return HillQuery{j.at("x").get<double>()};
  if (task == "tree") return TreeQuery{j.at("node").get<NodeId>()};
  SatQuery s;
  for (char c : j.at("bits").get<std::string>()) {
    s.bits.push_back(c == '1' ? 1 : 0);
  }
  return s;
}

// Stream indices for rng derivation, so message shuffles, summaries and
// agent draws never share a stream.
constexpr std::uint64_t kMessageStream = 0x5EEB;
constexpr std::uint64_t kSummaryStreamBase = 0xA000;

}  // namespace

ordered_json episode_log_to_json(const EpisodeLog& log) {
  ordered_json doc;
  doc["schema"] = "seekbench.episode.v1";
  doc["task"] = log.task;
  doc["instance"] = log.instance_id;
  doc["instance_digest"] = log.instance_digest;
  doc["agent"] = log.agent_id;
  doc["agent_params"] = log.agent_params;
  doc["seed"] = log.seed;
  doc["budget"] = log.budget;
  doc["intervention"] = ordered_json{{"parallel_p", log.intervention.parallel_p},
                                     {"summary_s", log.intervention.summary_s}};
  ordered_json steps = ordered_json::array();
  for (const auto& s : log.steps) {
    ordered_json step;
    step["i"] = s.index;
    step["query"] = query_to_json(s.query);
    step["value"] = s.feedback.value;
    if (!s.feedback.new_nodes.empty()) step["new_nodes"] = s.feedback.new_nodes;
    step["best"] = s.best_so_far;
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  doc["summary_rounds"] = log.summary_rounds;
  doc["retries"] = ordered_json{{"silent", log.silent_retries_used},
                                {"feedback", log.feedback_retries_used}};
  doc["raw_reward"] = log.raw_reward;
  doc["normalized_reward"] = log.normalized_reward;
  doc["termination"] = termination_name(log.termination);
  if (!log.transcript.empty()) {
    ordered_json tr = ordered_json::array();
    for (const auto& e : log.transcript) {
      tr.push_back(ordered_json{{"dir", e.outbound ? "out" : "in"},
                                {"line", e.line}});
    }
    doc["transcript"] = std::move(tr);
  }
  return doc;
}

EpisodeLog episode_log_from_json(const json& doc) {
  EpisodeLog log;
  log.task = doc.at("task").get<std::string>();
  log.instance_id = doc.at("instance").get<std::string>();
  log.instance_digest = doc.value("instance_digest", "");
  log.agent_id = doc.at("agent").get<std::string>();
  log.agent_params = doc.value("agent_params", json::object());
  log.seed = doc.at("seed").get<std::uint64_t>();
  log.budget = doc.at("budget").get<int>();
  log.intervention.parallel_p = doc.at("intervention").at("parallel_p").get<int>();
  log.intervention.summary_s = doc.at("intervention").at("summary_s").get<int>();
  for (const auto& sj : doc.at("steps")) {
    StepRecord s;
    s.index = sj.at("i").get<int>();
    s.query = query_from_json(sj.at("query"), log.task);
    s.feedback.value = sj.at("value").get<double>();
    if (sj.contains("new_nodes")) {
      s.feedback.new_nodes = sj.at("new_nodes").get<std::vector<NodeId>>();
    }
    s.best_so_far = sj.at("best").get<double>();
    log.steps.push_back(std::move(s));
  }
  log.summary_rounds = doc.at("summary_rounds").get<std::vector<int>>();
  log.silent_retries_used = doc.at("retries").at("silent").get<int>();
  log.feedback_retries_used = doc.at("retries").at("feedback").get<int>();
  log.raw_reward = doc.at("raw_reward").get<double>();
  log.normalized_reward = doc.at("normalized_reward").get<double>();
  log.termination = termination_from_name(doc.at("termination").get<std::string>());
  if (doc.contains("transcript")) {
    for (const auto& tj : doc.at("transcript")) {
      log.transcript.push_back(TranscriptEntry{
          tj.at("dir").get<std::string>() == "out",
          tj.at("line").get<std::string>()});
    }
  }
  return log;
}

EnvSession::EnvSession(const AnyInstance& instance) : instance_(&instance) {
  if (instance.task() == Task::tree) {
    frontier_ = std::make_unique<tree::Frontier>(instance.as_tree());
  }
}

std::optional<std::string> EnvSession::validate(const Query& query) const {
  switch (instance_->task()) {
    case Task::hill: {
      const auto* q = std::get_if<HillQuery>(&query);
      if (!q) return "query payload does not match the hill task";
      return hill::validate(instance_->as_hill(), q->x);
    }
    case Task::tree: {
      const auto* q = std::get_if<TreeQuery>(&query);
      if (!q) return "query payload does not match the tree task";
      return frontier_->validate(q->node);
    }
    case Task::sat: {
      const auto* q = std::get_if<SatQuery>(&query);
      if (!q) return "query payload does not match the sat task";
      return maxsat::validate(instance_->as_sat(), q->bits);
    }
  }
  return "unknown task";
}

Feedback EnvSession::apply(const Query& query, int round) {
  switch (instance_->task()) {
    case Task::hill: {
      const double x = std::get<HillQuery>(query).x;
      return Feedback{hill::eval(instance_->as_hill(), x), {}};
    }
    case Task::tree: {
      const NodeId node = std::get<TreeQuery>(query).node;
      auto [value, fresh] = frontier_->query(node, round);
      return Feedback{static_cast<double>(value), std::move(fresh)};
    }
    case Task::sat: {
      const auto& bits = std::get<SatQuery>(query).bits;
      return Feedback{
          static_cast<double>(maxsat::count_satisfied(instance_->as_sat(), bits)),
          {}};
    }
  }
  throw std::logic_error("EnvSession::apply: unreachable");
}

bool EnvSession::has_moves() const {
  if (instance_->task() == Task::tree) return !frontier_->available().empty();
  return true;
}

EpisodeLog run_episode(const AnyInstance& instance, Agent& agent,
                       const EpisodeConfig& config) {
  if (config.budget < 1) throw std::invalid_argument("run_episode: budget < 1");
  if (config.summary_s < 1) {
    throw std::invalid_argument("run_episode: summary_s < 1");
  }

  EnvSession session(instance);
  EpisodeState state = EpisodeState::fresh(config.budget, config.seed);
  Rng msg_rng(Rng::derive(config.seed, kMessageStream));

  EpisodeLog log;
  log.task = task_name(instance.task());
  log.instance_id = instance.id;
  log.instance_digest = instance_digest(instance);
  log.agent_id = config.agent_id;
  log.agent_params = config.agent_params;
  log.seed = config.seed;
  log.budget = config.budget;
  log.intervention.summary_s = config.summary_s;

  const bool conversational = agent.conversational();
  if (conversational) {
    auto intro = protocol::render_task_intro(instance, config.budget, msg_rng);
    intro.structured["reply_expected"] = true;
    agent.deliver(intro);
  }

  const int segment = config.budget / config.summary_s;
  int handoffs = 0;
  log.termination = Termination::completed;

  try {
    while (!state.budget.exhausted()) {
      if (!session.has_moves()) {
        log.termination = Termination::env_exhausted;
        break;
      }
      AgentReply reply = agent.next_query();
      std::string err = reply.error;
      if (err.empty()) {
        if (!reply.query) {
          err = "agent returned no query";
        } else if (auto bad = session.validate(*reply.query)) {
          err = *bad;
        }
      }
      if (!err.empty()) {
        bool silent;
        if (log.silent_retries_used < config.retry.silent_retries) {
          ++log.silent_retries_used;
          silent = true;
        } else if (log.feedback_retries_used < config.retry.feedback_retries) {
          ++log.feedback_retries_used;
          silent = false;
        } else {
          log.termination = Termination::retry_exhausted;
          break;
        }
        agent.observe_invalid(err, silent);
        if (conversational) {
          auto msg =
              protocol::render_error(err, silent, state.budget.remaining());
          msg.structured["reply_expected"] = true;
          agent.deliver(msg);
        }
        continue;
      }

      const Feedback feedback =
          session.apply(*reply.query, state.budget.used + 1);
      state = record_step(state, *reply.query, feedback);
      const StepRecord& step = state.history.back();
      agent.observe(step);

      const bool summary_now = config.summary_s > 1 &&
                               handoffs < config.summary_s - 1 &&
                               state.budget.used == segment * (handoffs + 1) &&
                               !state.budget.exhausted();

      if (conversational && !state.budget.exhausted()) {
        std::vector<NodeId> availability;
        bool fresh = false;
        if (instance.task() == Task::tree) {
          fresh = !feedback.new_nodes.empty();
          availability = tree::availability_order(*session.frontier(),
                                                  feedback.new_nodes, msg_rng);
        }
        auto msg = protocol::render_feedback(
            instance, step, state.budget.remaining(), availability, fresh);
        // At a hand-off boundary the summary is the message that asks for
        // the next query, not the feedback.
        msg.structured["reply_expected"] = !summary_now;
        agent.deliver(msg);
      }

      if (summary_now) {
        ++handoffs;
        log.summary_rounds.push_back(state.budget.used);
        if (conversational) {
          Rng summary_rng(Rng::derive(
              config.seed,
              kSummaryStreamBase + static_cast<std::uint64_t>(state.budget.used)));
          auto msg = protocol::render_summary(instance, state.history,
                                              state.budget.remaining(),
                                              summary_rng);
          msg.structured["reply_expected"] = true;
          agent.deliver(msg);
        }
      }
    }
  } catch (const AgentFailure& failure) {
    log.termination = failure.kind == AgentFailureKind::crash
                          ? Termination::agent_crash
                          : Termination::timeout;
  }

  log.steps = state.history;
  log.raw_reward = state.best_reward_raw;
  log.normalized_reward =
      state.history.empty()
          ? 0.0
          : normalize(state.best_reward_raw, instance.max_reward()).value;
  if (const auto* tr = agent.transcript()) log.transcript = *tr;
  return log;
}

ParallelResult run_parallel(const AnyInstance& instance,
                            const AgentFactory& factory, int budget, int p,
                            std::uint64_t seed, const EpisodeConfig& base,
                            bool allow_remainder) {
  if (p < 1) throw std::invalid_argument("run_parallel: p < 1");
  if (budget % p != 0 && !allow_remainder) {
    throw std::invalid_argument(
        "run_parallel: p must divide the budget (pass allow_remainder to "
        "drop the remainder)");
  }
  const int thread_budget = budget / p;
  if (thread_budget < 1) {
    throw std::invalid_argument("run_parallel: budget/p < 1");
  }

  ParallelResult result;
  for (int i = 0; i < p; ++i) {
    const std::uint64_t thread_seed =
        Rng::derive(seed, static_cast<std::uint64_t>(i));
    auto agent = factory(i, thread_budget, thread_seed);
    EpisodeConfig cfg = base;
    cfg.budget = thread_budget;
    cfg.seed = thread_seed;
    EpisodeLog log = run_episode(instance, *agent, cfg);
    log.intervention.parallel_p = p;
    result.reward = std::max(result.reward, log.normalized_reward);
    result.logs.push_back(std::move(log));
  }
  return result;
}

double pooled_parallel_estimate(std::vector<double> rewards, int p) {
  const int n = static_cast<int>(rewards.size());
  if (p < 1) throw std::invalid_argument("pooled_parallel_estimate: p < 1");
  if (n < p) throw std::invalid_argument("pooled_parallel_estimate: n < p");
  std::sort(rewards.begin(), rewards.end());
  // Weight of the i-th order statistic (1-based, i >= p) is
  // C(i-1, p-1) / C(n, p); the weights are built by the ratio recurrence
  // and normalized by their exact sum (the hockey-stick identity).
  double acc = 0.0;
  double weight_sum = 0.0;
  double a = 1.0;  // C(i-1, p-1) at i = p
  for (int i = p; i <= n; ++i) {
    acc += rewards[static_cast<std::size_t>(i - 1)] * a;
    weight_sum += a;
    a *= static_cast<double>(i) / static_cast<double>(i - p + 1);
  }
  return acc / weight_sum;
}

std::vector<Query> union_queries(const std::vector<EpisodeLog>& logs) {
  std::vector<Query> out;
  std::set<std::string> seen;
  for (const auto& log : logs) {
    for (const auto& step : log.steps) {
      const std::string key = query_to_json(step.query).dump();
      if (seen.insert(key).second) out.push_back(step.query);
    }
  }
  return out;
}

std::vector<Query> tree_union_replay_order(
    const tree::Instance& instance, const std::vector<EpisodeLog>& logs) {
  std::vector<std::uint8_t> in_union(
      static_cast<std::size_t>(instance.node_count), 0);
  for (const auto& log : logs) {
    for (const auto& step : log.steps) {
      in_union[static_cast<std::size_t>(std::get<TreeQuery>(step.query).node)] = 1;
    }
  }
  // Every per-thread explored set is connected and contains the root, so
  // the union is too; BFS from the root yields an order whose every node
  // has an already-visited neighbor.
  std::vector<Query> order;
  std::vector<std::uint8_t> visited(
      static_cast<std::size_t>(instance.node_count), 0);
  std::deque<NodeId> queue{instance.root};
  visited[static_cast<std::size_t>(instance.root)] = 1;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (v != instance.root) order.push_back(TreeQuery{v});
    for (NodeId nb : instance.adjacency[static_cast<std::size_t>(v)]) {
      if (!visited[static_cast<std::size_t>(nb)] &&
          in_union[static_cast<std::size_t>(nb)]) {
        visited[static_cast<std::size_t>(nb)] = 1;
        queue.push_back(nb);
      }
    }
  }
  return order;
}

void append_log_line(std::ostream& out, const EpisodeLog& log) {
  out << episode_log_to_json(log).dump() << '\n';
}

std::vector<EpisodeLog> load_log_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<EpisodeLog> logs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json doc = json::parse(line);
    if (doc.value("kind", "") == "manifest") continue;
    logs.push_back(episode_log_from_json(doc));
  }
  return logs;
}

}  // namespace seekbench::harness
