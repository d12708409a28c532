#pragma once

#include <string>
#include <vector>

#include "seekbench/instance_io.hpp"

namespace seekbench::presets {

// Pinned evaluated instances. "-main" are the primary single-instance
// configurations; the others are the secondary evaluated instances.
std::vector<std::string> names();
bool exists(const std::string& name);
AnyInstance make(const std::string& name);

// Random-suite parameter distributions (the 50-instance experiments).
hill::GenParams random_hill_params(Rng& rng, std::uint64_t instance_seed);
tree::GenParams random_tree_params(Rng& rng, std::uint64_t instance_seed);
maxsat::GenParams random_sat_params(Rng& rng, std::uint64_t instance_seed);
AnyInstance random_instance(Task task, Rng& rng, std::uint64_t instance_seed);

// Difficulty ladders: one parameter set per level, seeds derived from
// `seed` so a ladder is reproducible as a unit.
std::vector<hill::GenParams> hill_difficulty_sweep(std::uint64_t seed);
std::vector<tree::GenParams> tree_difficulty_sweep(std::uint64_t seed);
std::vector<maxsat::GenParams> sat_difficulty_sweep(std::uint64_t seed);

}  // namespace seekbench::presets
