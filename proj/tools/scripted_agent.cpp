// Deterministic wire-protocol agent for harness tests.
//
// Reads JSON observations line by line on stdin and answers on stdout
// whenever an observation asks for a reply ("reply_expected", default
// true; the version header never expects one). Behaviour comes from
// --mode:
//   constant   always send the same query (--x / --node / --bits)
//   replay     send lines from --file in order, then repeat the last
//   malformed  send "not json" every time (retry-policy tests)
//   hang       never answer (timeout tests)
//   crash      exit immediately after --count replies

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

int main(int argc, char** argv) {
  std::string mode = "constant";
  std::string file;
  std::string constant_line =
      R"({"reason": "scripted", "query": {"x": 5.0}})";
  long crash_after = -1;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--mode") {
      mode = next();
    } else if (arg == "--file") {
      file = next();
    } else if (arg == "--line") {
      constant_line = next();
    } else if (arg == "--count") {
      crash_after = std::stol(next());
    } else {
      std::cerr << "unknown flag " << arg << "\n";
      return 2;
    }
  }

  std::vector<std::string> replay;
  if (mode == "replay") {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) replay.push_back(line);
    }
    if (replay.empty()) {
      std::cerr << "replay file is empty\n";
      return 2;
    }
  }

  std::size_t at = 0;
  long replies = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    json obs = json::parse(line, nullptr, false);
    if (obs.is_discarded() || !obs.is_object()) continue;
    if (obs.contains("protocol")) continue;  // version header
    if (!obs.value("reply_expected", true)) continue;

    if (mode == "hang") {
      // Swallow input forever.
      continue;
    }
    if (crash_after >= 0 && replies >= crash_after) return 0;

    if (mode == "malformed") {
      std::cout << "this is not a query" << std::endl;
    } else if (mode == "replay") {
      std::cout << replay[std::min(at, replay.size() - 1)] << std::endl;
      ++at;
    } else {
      std::cout << constant_line << std::endl;
    }
    ++replies;
  }
  return 0;
}
