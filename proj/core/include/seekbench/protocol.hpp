#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "seekbench/envcore.hpp"
#include "seekbench/instance_io.hpp"
#include "seekbench/rng.hpp"

namespace seekbench::protocol {

enum class ObsKind { task_intro, feedback, availability, summary_handoff, error };

const char* obs_kind_name(ObsKind kind);

// One message to an agent: rendered text plus a machine-readable mirror
// of the same content. `structured` always carries "kind" and
// "remaining" (budget left after the event it reports).
struct ObservationMessage {
  ObsKind kind = ObsKind::feedback;
  std::string text;
  nlohmann::ordered_json structured;
};

// Shortest round-trip decimal form; every number embedded in rendered
// text goes through this so transcripts replay byte-for-byte.
std::string fmt_double(double v);

// Task intro. The tree variant presents the full adjacency list with both
// line order and per-node neighbor order shuffled from `rng`, so a seed
// reproduces the exact text.
ObservationMessage render_task_intro(const AnyInstance& instance, int budget,
                                     Rng& rng);

// Post-round feedback. For tree, `availability` is the presentation order
// produced by tree::availability_order and `fresh` says whether it lists
// only newly exposed nodes.
ObservationMessage render_feedback(const AnyInstance& instance,
                                   const StepRecord& step, int remaining,
                                   const std::vector<NodeId>& availability,
                                   bool fresh);

ObservationMessage render_error(const std::string& reason, bool silent,
                                int remaining);

// Mission hand-off digest: a pure function of (history, public instance
// data, rng). The harness derives `rng` from the episode seed and round,
// so a log suffices to regenerate the text.
ObservationMessage render_summary(const AnyInstance& instance,
                                  std::span<const StepRecord> history,
                                  int remaining, Rng& rng);

// Interior intervals between consecutive queried points count as gaps
// only above this size; the domain-boundary intervals always count.
inline constexpr double kInteriorGapThreshold = 1.0;

struct GapInterval {
  double lo = 0.0;
  double hi = 0.0;
  double size() const { return hi - lo; }
};

std::vector<GapInterval> unexplored_gaps(std::vector<double> xs);

struct QueryMessage {
  std::string reason;
  Query query;
};

// Parses one line of agent output: {"reason": "...", "query": {...}} with
// the task-specific payload ({"x": v} | {"node": i} | {"x0":0,...}).
// Returns nullopt and fills `error` on malformed input.
std::optional<QueryMessage> parse_query_message(const std::string& line,
                                                Task task, int sat_vars,
                                                std::string* error);

std::string query_to_wire(const Query& query, const std::string& reason);

}  // namespace seekbench::protocol
