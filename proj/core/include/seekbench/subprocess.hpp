#pragma once

#include <string>
#include <vector>

#include "seekbench/agent.hpp"
#include "seekbench/instance_io.hpp"
#include "seekbench/protocol.hpp"

namespace seekbench::subprocess {

struct ProtocolConfig {
  double timeout_seconds = 120.0;  // per round trip
};

// External agent speaking the newline-delimited wire protocol: one JSON
// observation per line on its stdin, one JSON query message per line
// expected on its stdout. The first outbound line is the version header
//   {"protocol":"seekbench.agent","version":1}
// Malformed replies surface as AgentReply.error (retry path); a dead or
// silent process throws AgentFailure and ends the episode.
class ProcessAgent : public Agent {
 public:
  ProcessAgent(std::vector<std::string> argv, Task task, int sat_vars,
               ProtocolConfig config = {});
  ~ProcessAgent() override;

  ProcessAgent(const ProcessAgent&) = delete;
  ProcessAgent& operator=(const ProcessAgent&) = delete;

  AgentReply next_query() override;
  void deliver(const protocol::ObservationMessage& msg) override;
  bool conversational() const override { return true; }
  const std::vector<TranscriptEntry>* transcript() const override {
    return &transcript_;
  }

 private:
  void send_line(const std::string& line);
  std::string read_line();

  Task task_;
  int sat_vars_;
  ProtocolConfig config_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  std::vector<TranscriptEntry> transcript_;
};

}  // namespace seekbench::subprocess
