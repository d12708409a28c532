#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seekbench/envcore.hpp"

namespace seekbench {

namespace protocol {
struct ObservationMessage;
}

// What an agent hands back for one round. `error` set (and no query)
// means the agent produced something unusable (malformed wire message);
// that goes through the same retry path as an invalid query.
struct AgentReply {
  std::optional<Query> query;
  std::string reason;  // free text, logged but never interpreted
  std::string error;
};

// Fatal agent-side failures: the episode ends immediately with a partial
// log, carrying one of these causes.
enum class AgentFailureKind { crash, timeout };

struct AgentFailure : std::runtime_error {
  AgentFailure(AgentFailureKind kind, const std::string& what)
      : std::runtime_error(what), kind(kind) {}
  AgentFailureKind kind;
};

struct TranscriptEntry {
  bool outbound = true;  // harness -> agent
  std::string line;
};

// One side of the interaction loop. The harness asks for a query, runs it
// through the oracle, and reports the outcome back. Conversational agents
// (external processes speaking the wire protocol) additionally receive
// every rendered observation via deliver(); in-process agents work from
// the typed events alone and skip the rendering cost.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual AgentReply next_query() = 0;

  // A valid round was recorded.
  virtual void observe(const StepRecord& step) { (void)step; }

  // The last query was rejected. Conversational agents also get the
  // rendered error message through deliver().
  virtual void observe_invalid(const std::string& reason, bool silent) {
    (void)reason;
    (void)silent;
  }

  virtual void deliver(const protocol::ObservationMessage& msg) { (void)msg; }

  virtual bool conversational() const { return false; }

  // Wire transcript, when the agent keeps one.
  virtual const std::vector<TranscriptEntry>* transcript() const {
    return nullptr;
  }
};

}  // namespace seekbench
