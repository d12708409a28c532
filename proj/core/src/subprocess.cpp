#include "seekbench/subprocess.hpp"

#include <csignal>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace seekbench::subprocess {

using nlohmann::ordered_json;

namespace {

void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

ProcessAgent::ProcessAgent(std::vector<std::string> argv, Task task,
                           int sat_vars, ProtocolConfig config)
    : task_(task), sat_vars_(sat_vars), config_(config) {
  if (argv.empty()) throw std::invalid_argument("ProcessAgent: empty command");
  ignore_sigpipe_once();

  int in_pipe[2];   // parent -> child
  int out_pipe[2];  // child -> parent
  if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0) {
    throw std::runtime_error("ProcessAgent: pipe() failed");
  }

  const int pid = ::fork();
  if (pid < 0) throw std::runtime_error("ProcessAgent: fork() failed");
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (auto& a : argv) args.push_back(a.data());
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }

  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);

  send_line(R"({"protocol":"seekbench.agent","version":1})");
}

ProcessAgent::~ProcessAgent() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    // Give the agent a moment to exit on EOF, then make sure.
    for (int i = 0; i < 50; ++i) {
      int status = 0;
      if (::waitpid(pid_, &status, WNOHANG) == pid_) return;
      ::usleep(2000);
    }
    ::kill(pid_, SIGKILL);
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
}

void ProcessAgent::send_line(const std::string& line) {
  transcript_.push_back(TranscriptEntry{true, line});
  std::string payload = line;
  payload += '\n';
  std::size_t off = 0;
  while (off < payload.size()) {
    const ssize_t n =
        ::write(to_child_, payload.data() + off, payload.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw AgentFailure(AgentFailureKind::crash,
                         "agent process is not accepting input");
    }
    off += static_cast<std::size_t>(n);
  }
}

std::string ProcessAgent::read_line() {
  const auto deadline_ms = static_cast<int>(config_.timeout_seconds * 1000.0);
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      transcript_.push_back(TranscriptEntry{false, line});
      return line;
    }
    struct pollfd pfd{from_child_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, deadline_ms);
    if (rc == 0) {
      throw AgentFailure(AgentFailureKind::timeout,
                         "agent did not reply within the round timeout");
    }
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw AgentFailure(AgentFailureKind::crash, "poll() failed");
    }
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw AgentFailure(AgentFailureKind::crash, "read() failed");
    }
    if (n == 0) {
      throw AgentFailure(AgentFailureKind::crash,
                         "agent process closed its output stream");
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

AgentReply ProcessAgent::next_query() {
  const std::string line = read_line();
  std::string error;
  auto msg = protocol::parse_query_message(line, task_, sat_vars_, &error);
  if (!msg) return AgentReply{std::nullopt, "", error};
  return AgentReply{std::move(msg->query), std::move(msg->reason), ""};
}

void ProcessAgent::deliver(const protocol::ObservationMessage& msg) {
  ordered_json doc = msg.structured;
  doc["text"] = msg.text;
  send_line(doc.dump());
}

}  // namespace seekbench::subprocess
