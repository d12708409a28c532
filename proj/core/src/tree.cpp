#include "seekbench/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace seekbench::tree {

Instance generate(const GenParams& p) {
  if (p.r_trap < 0 || p.r_good < 0 || p.r_trap + p.r_good < 1) {
    throw std::invalid_argument("tree::generate: need at least one gateway");
  }
  if (p.fanout < 1 || p.d_trap < 2 || p.d_good < 2) {
    throw std::invalid_argument("tree::generate: bad fanout or depth");
  }

  const int n = expected_node_count(p);
  std::vector<int> value(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);

  int next = 0;
  const int root = next++;
  value[static_cast<std::size_t>(root)] = 0;

  auto add_child = [&](int parent, int v) {
    const int id = next++;
    value[static_cast<std::size_t>(id)] = v;
    edges.emplace_back(parent, id);
    return id;
  };

  for (int g = 0; g < p.r_trap; ++g) {
    const int gateway = add_child(root, 2);
    for (int c = 0; c < p.fanout; ++c) {
      int prev = gateway;
      int v = 2;
      for (int j = 1; j <= p.d_trap; ++j) {
        // Six steps of momentum, then a +1 only every fourth step.
        if (j <= 6 || (j - 6) % 4 == 0) v += 1;
        prev = add_child(prev, v);
      }
    }
  }
  for (int g = 0; g < p.r_good; ++g) {
    const int gateway = add_child(root, 1);
    for (int c = 0; c < p.fanout; ++c) {
      int prev = gateway;
      for (int j = 1; j <= p.d_good - 1; ++j) {
        prev = add_child(prev, 1 + 4 * j);
      }
    }
  }
  if (next != n) throw std::logic_error("tree::generate: node count mismatch");

  Rng rng(p.seed);
  std::vector<NodeId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  Instance inst;
  inst.params = p;
  inst.node_count = n;
  inst.root = perm[static_cast<std::size_t>(root)];
  inst.id_of_structural = perm;
  inst.values.assign(static_cast<std::size_t>(n), 0);
  inst.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    inst.values[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        value[static_cast<std::size_t>(i)];
  }
  for (const auto& [a, b] : edges) {
    const NodeId pa = perm[static_cast<std::size_t>(a)];
    const NodeId pb = perm[static_cast<std::size_t>(b)];
    inst.adjacency[static_cast<std::size_t>(pa)].push_back(pb);
    inst.adjacency[static_cast<std::size_t>(pb)].push_back(pa);
  }
  for (auto& nbrs : inst.adjacency) rng.shuffle(nbrs);

  inst.max_value = *std::max_element(inst.values.begin(), inst.values.end());
  return inst;
}

Frontier::Frontier(const Instance& instance) : instance_(&instance) {
  const auto n = static_cast<std::size_t>(instance.node_count);
  queried_.assign(n, 0);
  available_round_.assign(n, -1);
  // The root's value is revealed up front and costs no budget.
  queried_[static_cast<std::size_t>(instance.root)] = 1;
  for (NodeId nb : instance.adjacency[static_cast<std::size_t>(instance.root)]) {
    available_round_[static_cast<std::size_t>(nb)] = 0;
    available_.push_back(nb);
  }
}

bool Frontier::is_queried(NodeId node) const {
  return queried_[static_cast<std::size_t>(node)] != 0;
}

bool Frontier::is_available(NodeId node) const {
  return !is_queried(node) &&
         available_round_[static_cast<std::size_t>(node)] >= 0;
}

int Frontier::available_since(NodeId node) const {
  return available_round_[static_cast<std::size_t>(node)];
}

std::optional<std::string> Frontier::validate(NodeId node) const {
  if (node < 0 || node >= instance_->node_count) {
    return "node id out of range";
  }
  if (is_queried(node)) {
    return "node already queried; do not query the same node twice";
  }
  if (!is_available(node)) {
    return "node is not adjacent to any explored node";
  }
  return std::nullopt;
}

std::pair<int, std::vector<NodeId>> Frontier::query(NodeId node, int round) {
  if (auto err = validate(node)) {
    throw std::logic_error("tree::Frontier::query: " + *err);
  }
  queried_[static_cast<std::size_t>(node)] = 1;
  available_.erase(std::find(available_.begin(), available_.end(), node));
  std::vector<NodeId> fresh;
  for (NodeId nb : instance_->adjacency[static_cast<std::size_t>(node)]) {
    if (!is_queried(nb) && available_round_[static_cast<std::size_t>(nb)] < 0) {
      available_round_[static_cast<std::size_t>(nb)] = round;
      available_.push_back(nb);
      fresh.push_back(nb);
    }
  }
  return {instance_->values[static_cast<std::size_t>(node)], fresh};
}

std::vector<NodeId> availability_order(const Frontier& frontier,
                                       const std::vector<NodeId>& new_nodes,
                                       Rng& rng) {
  if (!new_nodes.empty()) {
    std::vector<NodeId> out = new_nodes;
    rng.shuffle(out);
    return out;
  }
  std::vector<NodeId> out = frontier.available();
  std::stable_sort(out.begin(), out.end(), [&](NodeId a, NodeId b) {
    return frontier.available_since(a) > frontier.available_since(b);
  });
  // Shuffle runs of equal recency.
  std::size_t i = 0;
  while (i < out.size()) {
    std::size_t j = i + 1;
    while (j < out.size() &&
           frontier.available_since(out[j]) ==
               frontier.available_since(out[i])) {
      ++j;
    }
    if (j - i > 1) {
      std::vector<NodeId> run(out.begin() + static_cast<std::ptrdiff_t>(i),
                              out.begin() + static_cast<std::ptrdiff_t>(j));
      rng.shuffle(run);
      std::copy(run.begin(), run.end(),
                out.begin() + static_cast<std::ptrdiff_t>(i));
    }
    i = j;
  }
  return out;
}

}  // namespace seekbench::tree
