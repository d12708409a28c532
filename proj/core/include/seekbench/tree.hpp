#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seekbench/envcore.hpp"
#include "seekbench/rng.hpp"

namespace seekbench::tree {

struct GenParams {
  int r_trap = 3;   // trap gateways under the root
  int r_good = 3;   // good gateways under the root
  int fanout = 5;   // disjoint chains per gateway
  int d_trap = 40;  // trap chain length (nodes past the gateway)
  int d_good = 12;  // good depth; chains carry d_good - 1 nodes
  std::uint64_t seed = 0;
};

// Rooted tree over permuted public IDs. Values:
//   root 0; trap gateway 2; trap chain node j (1-based) adds +1 per step
//   for j <= 6, then +1 only every 4th step; good gateway 1; good chain
//   node j is 1 + 4j, peaking at 1 + 4*(d_good - 1).
// Node IDs are a uniform permutation so an ID says nothing about role.
struct Instance {
  int node_count = 0;
  NodeId root = 0;
  std::vector<std::vector<NodeId>> adjacency;  // neighbor order shuffled
  std::vector<int> values;                     // by public ID
  std::vector<NodeId> id_of_structural;        // structural index -> public ID
  int max_value = 0;
  GenParams params;
};

Instance generate(const GenParams& params);

inline int expected_node_count(const GenParams& p) {
  return 1 + p.r_trap + p.r_good + p.r_trap * p.fanout * p.d_trap +
         p.r_good * p.fanout * (p.d_good - 1);
}

inline int expected_max_value(const GenParams& p) {
  int best = 0;
  if (p.r_good >= 1) best = 1 + 4 * (p.d_good - 1);
  if (p.r_trap >= 1) {
    int trap = 2 + std::min(6, p.d_trap);
    if (p.d_trap > 6) trap += (p.d_trap - 6) / 4;
    best = std::max(best, trap);
  }
  return best;
}

// Exploration state for one episode: the queried set (always connected,
// always containing the root) plus the frontier of queryable nodes with
// the round at which each became available.
class Frontier {
 public:
  explicit Frontier(const Instance& instance);

  bool is_queried(NodeId node) const;
  bool is_available(NodeId node) const;
  const std::vector<NodeId>& available() const { return available_; }
  int available_since(NodeId node) const;

  // Validation only; does not mutate.
  std::optional<std::string> validate(NodeId node) const;

  // Pre: validate(node) passed. Reveals the value, moves the node into
  // the queried set, stamps its unqueried neighbors available at `round`.
  // Returns the value and the newly exposed nodes.
  std::pair<int, std::vector<NodeId>> query(NodeId node, int round);

 private:
  const Instance* instance_;
  std::vector<std::uint8_t> queried_;
  std::vector<int> available_round_;  // -1 = not yet adjacent to queried
  std::vector<NodeId> available_;
};

// Presentation order for the feedback message: if the last query exposed
// new nodes, just those, shuffled; otherwise every available node, most
// recently exposed first, ties shuffled.
std::vector<NodeId> availability_order(const Frontier& frontier,
                                       const std::vector<NodeId>& new_nodes,
                                       Rng& rng);

}  // namespace seekbench::tree
