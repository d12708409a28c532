#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seekbench/envcore.hpp"
#include "seekbench/rng.hpp"

namespace seekbench::hill {

inline constexpr double kDomainLo = 0.0;
inline constexpr double kDomainHi = 10.0;

// One Gaussian bump: g(x) = h * exp(-(x-c)^2 / w).
struct Hill {
  double center = 0.0;
  double width = 0.0;   // denominator of the exponent, not a std-dev
  double height = 0.0;
};

struct GenParams {
  int k = 3;        // coarse level: decoys sit near the 2^k grid
  int k_prime = 4;  // fine level for the needle, k_prime >= k
  double jitter_decoy = 0.1;    // fraction of the coarse spacing
  double jitter_needle = 0.2;   // fraction of the fine spacing
  double width_decoy = 0.01;    // fraction of the coarse spacing
  double width_needle = 0.008;  // fraction of the fine spacing
  std::uint64_t seed = 0;
};

struct Instance {
  std::vector<Hill> hills;  // decoys in grid order, needle last
  int needle_index = 0;
  std::optional<GenParams> params;  // absent for hand-specified instances
  double global_max = 0.0;
};

// Layout: one decoy per interior coarse grid point (2^k - 1 of them),
// jittered and with height drawn from {1..5}; one height-20 needle on an
// odd fine-grid index so its base point avoids the coarse grid. Draw
// order is fixed (decoys by ascending grid index, then the needle) so a
// seed pins the instance.
Instance generate(const GenParams& params);

// Assemble an instance from explicit hills (the evaluated instances are
// specified as literal lists, not seeds). Computes the global max.
Instance from_hills(std::vector<Hill> hills, int needle_index);

double eval(const Instance& instance, double x);

// Max of f over the domain: dense grid with spacing tied to the narrowest
// hill, then golden-section refinement of the best few grid points.
// Absolute tolerance 1e-9 or better.
double find_global_max(const std::vector<Hill>& hills);

// Query validation for the oracle. Out-of-range points are rejected, not
// clamped; they take the invalid-query retry path upstream.
std::optional<std::string> validate(const Instance& instance, double x);

}  // namespace seekbench::hill
