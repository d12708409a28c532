#include "seekbench/protocol.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace seekbench::protocol {

using nlohmann::json;
using nlohmann::ordered_json;

const char* obs_kind_name(ObsKind kind) {
  switch (kind) {
    case ObsKind::task_intro: return "task_intro";
    case ObsKind::feedback: return "feedback";
    case ObsKind::availability: return "availability";
    case ObsKind::summary_handoff: return "summary_handoff";
    case ObsKind::error: return "error";
  }
  return "?";
}

std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

namespace {

constexpr const char* kHillSystem =
    "You are playing a game to find the global maximum value of a hidden "
    "continuous function f(x). Note that the function may have many local "
    "maximums which are not globally maximal. You have a limited number of "
    "queries.\n\n"
    "The function is defined on the interval [0, 10].\n\n"
    "Rules:\n\n"
    "- In each turn, you can query the value of the function `f(x)` for any "
    "real number `x` in the interval `[0, 10]`.\n\n"
    "- The number of remaining queries will be provided in each turn.\n\n"
    "- Your goal is to find the global maximum value of `f(x)`.\n\n"
    "How to play:\n\n"
    "- Use the tool with a JSON payload like this: {\"reason\": \"your "
    "strategy for querying x\", \"query\": {\"x\": v}}, where 'v' is any real "
    "number between 0 and 10 that you want to query. The tool call MUST ONLY "
    "contain this JSON. No other text is allowed.\n\n"
    "- After each query, you will be told the value of `f(x)` for the `x` you "
    "queried.";

constexpr const char* kTreeSystem =
    "You are playing a graph game to find the maximum hidden node value. You "
    "have limited queries.\n\n"
    "Rules:\n\n"
    "- You are given the graph structure and the value of a starting node.\n\n"
    "- The order of nodes in adjacency lists is randomized. The list of valid "
    "nodes to query is ordered such that neighbors of more recently queried "
    "nodes appear first, with ties broken randomly.\n\n"
    "- Querying a node reveals its value.\n\n"
    "- Do not query the same node twice.\n\n"
    "- You can only query a node if it's a neighbor of an already known "
    "node.\n\n"
    "- Values of connected nodes differ by at most 4.\n\n"
    "How to play:\n\n"
    "- Use the tool with a JSON payload like this: {\"reason\": \"your "
    "reasoning here\", \"query\": {\"node\": i}}, where 'i' is the index of "
    "the node you want to query. The tool call MUST ONLY contain this JSON. "
    "No other text is allowed.\n\n"
    "- After each query, you will be told the value of the queried node.";

std::string sat_system(int vars, int clauses, int max_arity) {
  std::ostringstream out;
  out << "You are playing a game to find a Boolean assignment that maximizes "
         "the weighted sum of satisfied constraints of a hidden boolean "
         "formula.\n\n"
         "IMPORTANT: The formula is NOT in Conjunctive Normal Form (CNF).\n\n"
         "Rules:\n\n"
      << "- There are " << vars << " Boolean variables x0..x" << vars - 1
      << ".\n\n"
      << "- There are " << clauses << " weighted clauses.\n\n"
      << "- Each clause is formed by 1 to " << max_arity
      << " literals (variables or their negations) combined with logical "
         "AND.\n\n"
         "- A clause is satisfied if and only if ALL its literals are True "
         "(unlike standard CNF which uses OR).\n\n"
      << "- In each turn, you may query ANY full assignment (a list of 0/1 "
         "values of length "
      << vars
      << ").\n\n"
         "- You will receive the sum of weights of satisfied clauses for that "
         "assignment.\n\n"
         "- Your goal is to find the maximum weighted sum within the query "
         "budget.\n\n"
         "How to play:\n\n"
         "- Use the tool with a JSON payload like this: "
         "{\"reason\":\"your strategy\",\"query\":{\"x0\":0, \"x1\":1, "
         "\"x2\":0, ...}}.\n\n"
         "- The tool call MUST ONLY contain this JSON. No other text is "
         "allowed.";
  return out.str();
}

std::string join_nodes(const std::vector<NodeId>& nodes, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(nodes[i]);
  }
  return out;
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

}  // namespace

ObservationMessage render_task_intro(const AnyInstance& instance, int budget,
                                     Rng& rng) {
  ObservationMessage msg;
  msg.kind = ObsKind::task_intro;
  ordered_json st;
  st["kind"] = obs_kind_name(msg.kind);
  st["task"] = task_name(instance.task());
  st["budget"] = budget;
  st["remaining"] = budget;

  switch (instance.task()) {
    case Task::hill: {
      std::string user = "You have " + std::to_string(budget) +
                         " queries. Your goal is to find the maximum value.";
      msg.text = std::string(kHillSystem) + "\n\n" + user;
      st["domain"] = {hill::kDomainLo, hill::kDomainHi};
      break;
    }
    case Task::tree: {
      const auto& t = instance.as_tree();
      std::vector<NodeId> order(static_cast<std::size_t>(t.node_count));
      for (int i = 0; i < t.node_count; ++i) order[static_cast<std::size_t>(i)] = i;
      rng.shuffle(order);
      std::ostringstream lines;
      ordered_json adjacency = ordered_json::object();
      for (NodeId v : order) {
        auto nbrs = t.adjacency[static_cast<std::size_t>(v)];
        rng.shuffle(nbrs);
        lines << v << ": ";
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          if (i) lines << ", ";
          lines << nbrs[i];
        }
        lines << "\n";
        adjacency[std::to_string(v)] = nbrs;
      }
      auto valid = t.adjacency[static_cast<std::size_t>(t.root)];
      rng.shuffle(valid);
      std::ostringstream user;
      user << "n = " << t.node_count << "\n\n"
           << "Graph (by adjacency list): The order of nodes in the following "
              "adjacency list and the order of neighbors for each node are "
              "both randomized.\n\n"
           << lines.str() << "\n"
           << "Start node: " << t.root << ". Value: 0. You have " << budget
           << " queries remaining. Your goal is to find the maximum value.\n\n"
           << "Valid nodes to query next: " << join_nodes(valid, " ") << ".";
      msg.text = std::string(kTreeSystem) + "\n\n" + user.str();
      st["n"] = t.node_count;
      st["root"] = t.root;
      st["adjacency"] = std::move(adjacency);
      st["valid_next"] = valid;
      break;
    }
    case Task::sat: {
      const auto& s = instance.as_sat();
      const int arity = maxsat::max_clause_arity(s);
      std::string user = "You have " + std::to_string(budget) +
                         " queries. Maximize the number of satisfied clauses "
                         "(m=" +
                         std::to_string(s.m) + ").";
      msg.text = sat_system(s.n, s.m, arity) + "\n\n" + user;
      st["n"] = s.n;
      st["m"] = s.m;
      st["max_clause_arity"] = arity;
      break;
    }
  }
  msg.structured = std::move(st);
  return msg;
}

ObservationMessage render_feedback(const AnyInstance& instance,
                                   const StepRecord& step, int remaining,
                                   const std::vector<NodeId>& availability,
                                   bool fresh) {
  ObservationMessage msg;
  msg.kind = ObsKind::feedback;
  ordered_json st;
  st["kind"] = obs_kind_name(msg.kind);
  st["remaining"] = remaining;
  switch (instance.task()) {
    case Task::hill: {
      const double x = std::get<HillQuery>(step.query).x;
      msg.text = "Value of f(" + fmt_double(x) + ") is " +
                 fmt_double(step.feedback.value) +
                 ". Remaining queries: " + std::to_string(remaining) + ".";
      st["x"] = x;
      st["value"] = step.feedback.value;
      break;
    }
    case Task::tree: {
      const NodeId node = std::get<TreeQuery>(step.query).node;
      const int value = static_cast<int>(step.feedback.value);
      std::string text = "VALUE of " + std::to_string(node) + " is " +
                         std::to_string(value) +
                         ". Remaining queries: " + std::to_string(remaining) +
                         ". ";
      if (fresh) {
        text += "This query has made new neighbors available to query: " +
                join_nodes(availability, " ") +
                ". You can still choose to query from previously available "
                "neighbors.";
      } else {
        text +=
            "No new neighbors became available. All available nodes to query "
            "(most recent first): " +
            join_nodes(availability, " ") + ".";
      }
      msg.text = std::move(text);
      st["node"] = node;
      st["value"] = value;
      st["new_nodes_only"] = fresh;
      st["available"] = availability;
      break;
    }
    case Task::sat: {
      const int score = static_cast<int>(step.feedback.value);
      msg.text = "Satisfied clauses: " + std::to_string(score) +
                 ". Remaining queries: " + std::to_string(remaining) + ".";
      st["score"] = score;
      st["assignment"] = bits_to_string(std::get<SatQuery>(step.query).bits);
      break;
    }
  }
  msg.structured = std::move(st);
  return msg;
}

ObservationMessage render_error(const std::string& reason, bool silent,
                                int remaining) {
  ObservationMessage msg;
  msg.kind = ObsKind::error;
  // Silent retries carry no diagnostic, mirroring a dropped-and-resampled
  // turn; the later retries spell the problem out.
  msg.text = silent ? "Invalid query. Send a new query."
                    : "Invalid query: " + reason +
                          " Send a corrected query. Remaining queries: " +
                          std::to_string(remaining) + ".";
  msg.structured = ordered_json{{"kind", obs_kind_name(msg.kind)},
                                {"silent", silent},
                                {"reason", silent ? "" : reason},
                                {"remaining", remaining}};
  return msg;
}

std::vector<GapInterval> unexplored_gaps(std::vector<double> xs) {
  std::vector<GapInterval> gaps;
  if (xs.empty()) {
    gaps.push_back({hill::kDomainLo, hill::kDomainHi});
    return gaps;
  }
  std::sort(xs.begin(), xs.end());
  if (xs.front() > hill::kDomainLo) {
    gaps.push_back({hill::kDomainLo, xs.front()});
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double size = xs[i + 1] - xs[i];
    if (size > kInteriorGapThreshold) gaps.push_back({xs[i], xs[i + 1]});
  }
  if (xs.back() < hill::kDomainHi) {
    gaps.push_back({xs.back(), hill::kDomainHi});
  }
  return gaps;
}

namespace {

ObservationMessage summary_base(ordered_json st, std::string text) {
  ObservationMessage msg;
  msg.kind = ObsKind::summary_handoff;
  msg.text = std::move(text);
  msg.structured = std::move(st);
  return msg;
}

ObservationMessage hill_summary(std::span<const StepRecord> history,
                                int remaining) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(history.size());
  std::vector<double> xs;
  for (const auto& step : history) {
    const double x = std::get<HillQuery>(step.query).x;
    pts.emplace_back(x, step.feedback.value);
    xs.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  const auto gaps = unexplored_gaps(std::move(xs));

  std::ostringstream out;
  out << "### MISSION HAND-OFF ###\n\n"
      << "A previous agent spent " << history.size()
      << " queries exploring the domain [0, 10] but was terminated. You are a "
         "NEW agent brought in to take over. You must find the global "
         "maximum.\n\n"
      << "**Data Collected by Previous Agent (Sorted by x):**\n\n";
  for (const auto& [x, y] : pts) {
    out << "x=" << fmt_double(x) << " -> f(x)=" << fmt_double(y) << "\n";
  }
  out << "\n**Unexplored Gaps:**\n\n";
  for (const auto& gap : gaps) {
    out << "* Interval [" << fmt_double(gap.lo) << ", " << fmt_double(gap.hi)
        << "] (Gap size: " << fmt_double(gap.size()) << ").\n";
  }
  out << "\n**Instructions for the New Agent:**\n\n"
      << "1. Review the history. Did the previous agent get stuck in a local "
         "maximum?\n\n"
      << "2. Formulate a fresh plan to utilize your remaining budget.\n\n"
      << "You have " << remaining
      << " queries remaining. Review the Hand-off data above and output your "
         "next query.";

  ordered_json st;
  st["kind"] = obs_kind_name(ObsKind::summary_handoff);
  st["remaining"] = remaining;
  ordered_json jp = ordered_json::array();
  for (const auto& [x, y] : pts) jp.push_back({x, y});
  st["points_sorted"] = std::move(jp);
  ordered_json jg = ordered_json::array();
  for (const auto& gap : gaps) jg.push_back({gap.lo, gap.hi});
  st["gaps"] = std::move(jg);
  return summary_base(std::move(st), out.str());
}

ObservationMessage tree_summary(const tree::Instance& t,
                                std::span<const StepRecord> history,
                                int remaining, Rng& rng) {
  // Height = distance from the root, over the public adjacency.
  std::vector<int> height(static_cast<std::size_t>(t.node_count), -1);
  std::deque<NodeId> bfs{t.root};
  height[static_cast<std::size_t>(t.root)] = 0;
  while (!bfs.empty()) {
    const NodeId v = bfs.front();
    bfs.pop_front();
    for (NodeId nb : t.adjacency[static_cast<std::size_t>(v)]) {
      if (height[static_cast<std::size_t>(nb)] < 0) {
        height[static_cast<std::size_t>(nb)] =
            height[static_cast<std::size_t>(v)] + 1;
        bfs.push_back(nb);
      }
    }
  }

  std::vector<std::uint8_t> queried(static_cast<std::size_t>(t.node_count), 0);
  queried[static_cast<std::size_t>(t.root)] = 1;
  NodeId best_node = t.root;
  int best_value = 0;
  bool have_best = false;
  std::ostringstream hist;
  for (const auto& step : history) {
    const NodeId node = std::get<TreeQuery>(step.query).node;
    const int value = static_cast<int>(step.feedback.value);
    queried[static_cast<std::size_t>(node)] = 1;
    if (!have_best || value > best_value) {
      have_best = true;
      best_node = node;
      best_value = value;
    }
    hist << "* Node " << node << " -> value " << value << "\n";
  }

  std::map<int, std::vector<NodeId>> by_height;
  for (NodeId v = 0; v < t.node_count; ++v) {
    if (queried[static_cast<std::size_t>(v)]) continue;
    const bool actionable = std::any_of(
        t.adjacency[static_cast<std::size_t>(v)].begin(),
        t.adjacency[static_cast<std::size_t>(v)].end(),
        [&](NodeId nb) { return queried[static_cast<std::size_t>(nb)] != 0; });
    if (actionable) by_height[height[static_cast<std::size_t>(v)]].push_back(v);
  }
  for (auto& [h, nodes] : by_height) rng.shuffle(nodes);

  std::ostringstream out;
  out << "### MISSION HAND-OFF ###\n\n"
      << "A previous agent spent " << history.size()
      << " queries exploring the graph but was terminated. You are a NEW "
         "agent brought in to take over. You must find the maximum value.\n\n"
      << "**Query History (in order):**\n\n"
      << hist.str() << "\n**Current Best Found:**\n\n"
      << "Node " << best_node << " with Value " << best_value << ".\n\n"
      << "**Next Nodes to Query (grouped by height):**\n"
      << "Each listed node is actionable (unknown, with a known neighbor). "
         "Node order is shuffled within each height.\n\n";
  for (const auto& [h, nodes] : by_height) {
    out << "* height " << h << ": [";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) out << ", ";
      out << nodes[i];
    }
    out << "]\n";
  }
  out << "\n**Instructions for the New Agent:**\n\n"
      << "Pick a node to query next. Do not blindly continue the last path; "
         "consider switching to a different height/frontier.\n\n"
      << "You have " << remaining << " queries remaining. Output your next "
      << "query.";

  ordered_json st;
  st["kind"] = obs_kind_name(ObsKind::summary_handoff);
  st["remaining"] = remaining;
  st["best_node"] = best_node;
  st["best_value"] = best_value;
  ordered_json fr = ordered_json::object();
  for (const auto& [h, nodes] : by_height) fr[std::to_string(h)] = nodes;
  st["frontier_by_height"] = std::move(fr);
  return summary_base(std::move(st), out.str());
}

ObservationMessage sat_summary(const maxsat::Instance& s,
                               std::span<const StepRecord> history,
                               int remaining) {
  const auto t = history.size();
  int best_score = -1;
  std::vector<std::uint8_t> best_bits;
  std::vector<int> zeros(static_cast<std::size_t>(s.n), 0);
  std::vector<int> ones(static_cast<std::size_t>(s.n), 0);
  std::ostringstream hist;
  std::size_t step_no = 0;
  for (const auto& step : history) {
    ++step_no;
    const auto& bits = std::get<SatQuery>(step.query).bits;
    const int score = static_cast<int>(step.feedback.value);
    hist << "* step " << step_no << ": score=" << score
         << " | assignment=" << bits_to_string(bits) << "\n";
    for (int v = 0; v < s.n; ++v) {
      (bits[static_cast<std::size_t>(v)] ? ones : zeros)[static_cast<std::size_t>(v)]++;
    }
    if (score > best_score) {
      best_score = score;
      best_bits = bits;
    }
  }

  auto most_imbalanced = [&](const std::vector<int>& counts) {
    std::vector<int> vars(static_cast<std::size_t>(s.n));
    for (int v = 0; v < s.n; ++v) vars[static_cast<std::size_t>(v)] = v;
    std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) {
      return counts[static_cast<std::size_t>(a)] <
             counts[static_cast<std::size_t>(b)];
    });
    vars.resize(std::min<std::size_t>(3, vars.size()));
    return vars;
  };
  const auto fewest_zeros = most_imbalanced(zeros);
  const auto fewest_ones = most_imbalanced(ones);

  std::ostringstream out;
  out << "### MISSION HAND-OFF ###\n\n"
      << "A previous agent spent " << t
      << " queries exploring the MAX-SAT black-box but was terminated. You "
         "are a NEW agent brought in to take over.\n\n"
      << "**Progress:** tried " << t << " assignments. Best score so far: **"
      << best_score << "**.\n\n"
      << "**Query History (in order):**\n\n"
      << hist.str() << "\n**Best Assignment Found (inner x0..xN-1 "
      << "bitstring):**\n\n"
      << bits_to_string(best_bits) << "\n\n"
      << "**Coverage Summary:**\n\n"
      << "Counts below summarize how often each variable took value 0 or 1 "
         "across the queried assignments.\n\n"
      << "- Variables with fewest 0s observed: ";
  for (std::size_t i = 0; i < fewest_zeros.size(); ++i) {
    const int v = fewest_zeros[i];
    if (i) out << ", ";
    out << "x" << v << " (was 0 in " << zeros[static_cast<std::size_t>(v)]
        << "/" << t << ")";
  }
  out << "\n\n- Variables with fewest 1s observed: ";
  for (std::size_t i = 0; i < fewest_ones.size(); ++i) {
    const int v = fewest_ones[i];
    if (i) out << ", ";
    out << "x" << v << " (was 1 in " << ones[static_cast<std::size_t>(v)]
        << "/" << t << ")";
  }
  out << "\n\nYou have " << remaining << " queries remaining.";

  ordered_json st;
  st["kind"] = obs_kind_name(ObsKind::summary_handoff);
  st["remaining"] = remaining;
  st["best_score"] = best_score;
  st["best_assignment"] = bits_to_string(best_bits);
  st["zero_counts"] = zeros;
  st["one_counts"] = ones;
  return summary_base(std::move(st), out.str());
}

}  // namespace

ObservationMessage render_summary(const AnyInstance& instance,
                                  std::span<const StepRecord> history,
                                  int remaining, Rng& rng) {
  switch (instance.task()) {
    case Task::hill: return hill_summary(history, remaining);
    case Task::tree: return tree_summary(instance.as_tree(), history, remaining, rng);
    case Task::sat: return sat_summary(instance.as_sat(), history, remaining);
  }
  throw std::logic_error("render_summary: unreachable");
}

std::optional<QueryMessage> parse_query_message(const std::string& line,
                                                Task task, int sat_vars,
                                                std::string* error) {
  const auto fail = [&](const std::string& why) {
    if (error) *error = why;
    return std::nullopt;
  };
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return fail("message is not a JSON object");
  }
  if (!doc.contains("query") || !doc["query"].is_object()) {
    return fail("missing \"query\" object");
  }
  QueryMessage msg;
  msg.reason = doc.value("reason", "");
  const json& q = doc["query"];
  switch (task) {
    case Task::hill: {
      if (!q.contains("x") || !q["x"].is_number()) {
        return fail("hill query needs a numeric \"x\"");
      }
      msg.query = HillQuery{q["x"].get<double>()};
      break;
    }
    case Task::tree: {
      if (!q.contains("node") || !q["node"].is_number_integer()) {
        return fail("tree query needs an integer \"node\"");
      }
      msg.query = TreeQuery{q["node"].get<NodeId>()};
      break;
    }
    case Task::sat: {
      SatQuery sq;
      sq.bits.resize(static_cast<std::size_t>(sat_vars));
      if (static_cast<int>(q.size()) != sat_vars) {
        return fail("sat query must assign exactly x0..x" +
                    std::to_string(sat_vars - 1));
      }
      for (int v = 0; v < sat_vars; ++v) {
        const std::string key = "x" + std::to_string(v);
        if (!q.contains(key)) return fail("sat query missing \"" + key + "\"");
        const json& bit = q[key];
        int val;
        if (bit.is_boolean()) {
          val = bit.get<bool>() ? 1 : 0;
        } else if (bit.is_number_integer()) {
          val = bit.get<int>();
        } else {
          return fail("sat query value for \"" + key + "\" must be 0 or 1");
        }
        if (val != 0 && val != 1) {
          return fail("sat query value for \"" + key + "\" must be 0 or 1");
        }
        sq.bits[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(val);
      }
      msg.query = std::move(sq);
      break;
    }
  }
  return msg;
}

std::string query_to_wire(const Query& query, const std::string& reason) {
  ordered_json doc;
  doc["reason"] = reason;
  ordered_json q;
  if (const auto* h = std::get_if<HillQuery>(&query)) {
    q["x"] = h->x;
  } else if (const auto* t = std::get_if<TreeQuery>(&query)) {
    q["node"] = t->node;
  } else {
    const auto& s = std::get<SatQuery>(query);
    for (std::size_t v = 0; v < s.bits.size(); ++v) {
      q["x" + std::to_string(v)] = static_cast<int>(s.bits[v]);
    }
  }
  doc["query"] = std::move(q);
  return doc.dump();
}

}  // namespace seekbench::protocol
