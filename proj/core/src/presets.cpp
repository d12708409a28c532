#include "seekbench/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace seekbench::presets {

namespace {

// The primary hill instance: seven moderate decoys and one height-20
// needle at 1.3. The needle width is calibrated so the reference
// explore-exploit agent reproduces the published mean rewards at both
// budgets; see the width note in tests/acceptance.cpp.
hill::Instance hill_main() {
  std::vector<hill::Hill> hills = {
      {1.33, 0.1, 1.0}, {2.77, 0.2, 5.0}, {4.01, 0.1, 2.0}, {5.31, 0.1, 1.0},
      {6.45, 0.1, 2.0}, {7.82, 0.2, 3.0}, {8.95, 0.1, 4.0},
      {1.3, 0.031, 20.0},
  };
  return hill::from_hills(std::move(hills), 7);
}

hill::Instance hill_alt() {
  std::vector<hill::Hill> hills = {
      {1.28, 0.1, 1.0}, {2.65, 0.1, 2.0}, {3.83, 0.1, 4.0}, {5.11, 0.1, 1.0},
      {6.44, 0.1, 2.0}, {7.6, 0.1, 3.0},  {8.77, 0.1, 4.0},
      {6.2, 0.01, 20.0},
  };
  return hill::from_hills(std::move(hills), 7);
}

constexpr std::uint64_t kTreeMainSeed = 7001;
constexpr std::uint64_t kTreeAlt1Seed = 7002;
constexpr std::uint64_t kTreeAlt2Seed = 7003;
constexpr std::uint64_t kSatMainSeed = 7010;

}  // namespace

std::vector<std::string> names() {
  return {"hill-main", "hill-alt",  "tree-main",
          "tree-alt1", "tree-alt2", "sat-main"};
}

bool exists(const std::string& name) {
  const auto all = names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

AnyInstance make(const std::string& name) {
  AnyInstance inst;
  inst.id = name;
  if (name == "hill-main") {
    inst.payload = hill_main();
  } else if (name == "hill-alt") {
    inst.payload = hill_alt();
  } else if (name == "tree-main") {
    inst.payload = tree::generate({3, 3, 5, 40, 12, kTreeMainSeed});
  } else if (name == "tree-alt1") {
    inst.payload = tree::generate({2, 2, 3, 40, 14, kTreeAlt1Seed});
  } else if (name == "tree-alt2") {
    inst.payload = tree::generate({4, 4, 4, 40, 16, kTreeAlt2Seed});
  } else if (name == "sat-main") {
    inst.payload = maxsat::generate({15, 120, 4, 2, 80, kSatMainSeed});
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return inst;
}

hill::GenParams random_hill_params(Rng& rng, std::uint64_t instance_seed) {
  hill::GenParams p;
  p.k = static_cast<int>(rng.uniform_int(2, 4));
  p.k_prime = p.k + static_cast<int>(rng.uniform_int(1, 2));
  p.width_decoy = 0.01;
  p.width_needle = 0.008;
  p.jitter_decoy = 0.1;
  p.jitter_needle = 0.2;
  p.seed = instance_seed;
  return p;
}

tree::GenParams random_tree_params(Rng& rng, std::uint64_t instance_seed) {
  tree::GenParams p;
  p.r_trap = static_cast<int>(rng.uniform_int(1, 4));
  p.r_good = static_cast<int>(rng.uniform_int(1, 4));
  p.fanout = static_cast<int>(rng.uniform_int(3, 5));
  p.d_trap = static_cast<int>(rng.uniform_int(20, 40));
  p.d_good = static_cast<int>(rng.uniform_int(10, 16));
  p.seed = instance_seed;
  return p;
}

maxsat::GenParams random_sat_params(Rng& rng, std::uint64_t instance_seed) {
  maxsat::GenParams p;
  p.n = static_cast<int>(rng.uniform_int(12, 24));
  p.k_gold = static_cast<int>(rng.uniform_int(3, 4));
  p.k_other = static_cast<int>(rng.uniform_int(2, 6));
  p.w_gold = static_cast<int>(rng.uniform_int(60, 160));
  p.m = p.w_gold + static_cast<int>(rng.uniform_int(30, 80));
  p.seed = instance_seed;
  return p;
}

AnyInstance random_instance(Task task, Rng& rng, std::uint64_t instance_seed) {
  AnyInstance inst;
  switch (task) {
    case Task::hill:
      inst.payload = hill::generate(random_hill_params(rng, instance_seed));
      break;
    case Task::tree:
      inst.payload = tree::generate(random_tree_params(rng, instance_seed));
      break;
    case Task::sat:
      inst.payload = maxsat::generate(random_sat_params(rng, instance_seed));
      break;
  }
  inst.id = std::string(task_name(task)) + "-rand-" + instance_digest(inst);
  return inst;
}

std::vector<hill::GenParams> hill_difficulty_sweep(std::uint64_t seed) {
  std::vector<hill::GenParams> out;
  for (int k_prime = 2; k_prime <= 8; ++k_prime) {
    hill::GenParams p;
    p.k = k_prime - 1;
    p.k_prime = k_prime;
    p.width_decoy = 0.01;
    p.width_needle = 0.008;
    p.jitter_decoy = 0.1;
    p.jitter_needle = 0.2;
    p.seed = Rng::derive(seed, static_cast<std::uint64_t>(k_prime));
    out.push_back(p);
  }
  return out;
}

std::vector<tree::GenParams> tree_difficulty_sweep(std::uint64_t seed) {
  std::vector<tree::GenParams> out;
  for (int r_good = 1; r_good <= 7; ++r_good) {
    tree::GenParams p;
    p.r_trap = 4;
    p.r_good = r_good;
    p.fanout = 3;
    p.d_trap = 40;
    p.d_good = 12;
    p.seed = Rng::derive(seed, static_cast<std::uint64_t>(r_good));
    out.push_back(p);
  }
  return out;
}

std::vector<maxsat::GenParams> sat_difficulty_sweep(std::uint64_t seed) {
  std::vector<maxsat::GenParams> out;
  for (int k_gold = 1; k_gold <= 7; ++k_gold) {
    maxsat::GenParams p;
    p.k_gold = k_gold;
    p.k_other = 2;
    p.n = 11 + k_gold;
    p.w_gold = 130 + 10 * k_gold;
    p.m = 50 + p.w_gold;
    p.seed = Rng::derive(seed, static_cast<std::uint64_t>(k_gold));
    out.push_back(p);
  }
  return out;
}

}  // namespace seekbench::presets
