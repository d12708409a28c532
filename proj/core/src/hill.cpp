#include "seekbench/hill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seekbench::hill {

namespace {

double eval_hills(const std::vector<Hill>& hills, double x) {
  double sum = 0.0;
  for (const Hill& h : hills) {
    const double d = x - h.center;
    sum += h.height * std::exp(-(d * d) / h.width);
  }
  return sum;
}

double golden_refine(const std::vector<Hill>& hills, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = eval_hills(hills, x1);
  double f2 = eval_hills(hills, x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = eval_hills(hills, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = eval_hills(hills, x1);
    }
  }
  return eval_hills(hills, 0.5 * (a + b));
}

}  // namespace

Instance generate(const GenParams& p) {
  if (p.k < 1 || p.k_prime < p.k) {
    throw std::invalid_argument("hill::generate: need k >= 1 and k_prime >= k");
  }
  if (p.jitter_decoy <= 0 || p.jitter_needle <= 0 || p.width_decoy <= 0 ||
      p.width_needle <= 0) {
    throw std::invalid_argument("hill::generate: fractions must be positive");
  }

  Rng rng(p.seed);
  const double span = kDomainHi - kDomainLo;
  const int coarse_cells = 1 << p.k;
  const double coarse_dx = span / coarse_cells;
  const int fine_cells = 1 << p.k_prime;
  const double fine_dx = span / fine_cells;

  Instance inst;
  inst.params = p;
  for (int m = 1; m < coarse_cells; ++m) {
    const double base = kDomainLo + coarse_dx * m;
    const double eps =
        rng.uniform(-p.jitter_decoy * coarse_dx, p.jitter_decoy * coarse_dx);
    const double height = static_cast<double>(rng.uniform_int(1, 5));
    inst.hills.push_back(Hill{base + eps, p.width_decoy * coarse_dx, height});
  }

  // Odd fine index: with k_prime > k every odd fine point is off the
  // coarse grid; with k_prime == k the needle shares the decoy grid.
  const int odd_count = fine_cells / 2;
  const int m_needle =
      2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(odd_count))) + 1;
  if (p.k_prime > p.k && m_needle % (1 << (p.k_prime - p.k)) == 0) {
    throw std::logic_error("hill::generate: needle landed on the coarse grid");
  }
  const double base = kDomainLo + fine_dx * m_needle;
  const double eps =
      rng.uniform(-p.jitter_needle * fine_dx, p.jitter_needle * fine_dx);
  inst.hills.push_back(Hill{base + eps, p.width_needle * fine_dx, 20.0});
  inst.needle_index = static_cast<int>(inst.hills.size()) - 1;

  inst.global_max = find_global_max(inst.hills);
  return inst;
}

Instance from_hills(std::vector<Hill> hills, int needle_index) {
  if (hills.empty()) throw std::invalid_argument("hill::from_hills: no hills");
  if (needle_index < 0 || needle_index >= static_cast<int>(hills.size())) {
    throw std::invalid_argument("hill::from_hills: bad needle index");
  }
  Instance inst;
  inst.hills = std::move(hills);
  inst.needle_index = needle_index;
  inst.global_max = find_global_max(inst.hills);
  return inst;
}

double eval(const Instance& instance, double x) {
  return eval_hills(instance.hills, x);
}

double find_global_max(const std::vector<Hill>& hills) {
  double min_width = hills.front().width;
  for (const Hill& h : hills) min_width = std::min(min_width, h.width);

  // Spacing tracks the narrowest hill so the needle cannot slip between
  // grid points, capped to keep degenerate widths from exploding the scan.
  double spacing = min_width / 20.0;
  const double span = kDomainHi - kDomainLo;
  constexpr std::size_t kMaxPoints = 4'000'000;
  if (span / spacing > static_cast<double>(kMaxPoints)) {
    spacing = span / static_cast<double>(kMaxPoints);
  }
  const std::size_t n = static_cast<std::size_t>(span / spacing) + 1;

  // Keep the best few well-separated grid points and refine each basin;
  // the true max can sit in a basin whose grid sample is a close second.
  struct Cand {
    std::size_t idx = 0;
    double val = -1.0;
  };
  constexpr std::size_t kSeparation = 24;
  std::vector<Cand> top(4);
  auto offer = [&top](std::size_t idx, double val) {
    for (Cand& c : top) {
      const std::size_t gap = idx > c.idx ? idx - c.idx : c.idx - idx;
      if (c.val >= 0.0 && gap < kSeparation) {
        if (val > c.val) c = {idx, val};
        return;
      }
    }
    auto worst = std::min_element(
        top.begin(), top.end(),
        [](const Cand& a, const Cand& b) { return a.val < b.val; });
    if (val > worst->val) *worst = {idx, val};
  };
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = std::min(kDomainLo + spacing * static_cast<double>(i),
                              kDomainHi);
    offer(i, eval_hills(hills, x));
  }

  double best = 0.0;
  for (const Cand& c : top) {
    if (c.val < 0.0) continue;
    const double x = kDomainLo + spacing * static_cast<double>(c.idx);
    const double lo = std::max(kDomainLo, x - 2.0 * spacing);
    const double hi = std::min(kDomainHi, x + 2.0 * spacing);
    best = std::max(best, golden_refine(hills, lo, hi));
  }
  return best;
}

std::optional<std::string> validate(const Instance&, double x) {
  if (!std::isfinite(x) || x < kDomainLo || x > kDomainHi) {
    return "x must be a real number in [0, 10]";
  }
  return std::nullopt;
}

}  // namespace seekbench::hill
