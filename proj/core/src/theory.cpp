#include "seekbench/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace seekbench::theory {

double PowerLawModel::q(double x) const { return c * std::pow(x, alpha); }

namespace {

void check_model(const PowerLawModel& model) {
  if (!(model.c > 0.0 && model.c <= 1.0)) {
    throw std::domain_error("power law: need 0 < c <= 1");
  }
  if (!(model.alpha > 0.0 && model.alpha < 1.0)) {
    throw std::domain_error("power law: need 0 < alpha < 1");
  }
}

}  // namespace

bool benefit_condition(const PowerLawModel& model, double x, int p) {
  check_model(model);
  if (p <= 1) throw std::domain_error("benefit_condition: p > 1 required");
  if (!(x > 0.0 && x <= 1.0)) {
    throw std::domain_error("benefit_condition: x must lie in (0, 1]");
  }
  const double split = model.q(x / p);
  const double parallel = 1.0 - std::pow(1.0 - split, p);
  return parallel > model.q(x);
}

double solve_root(int p, double alpha) {
  if (p < 2) throw std::domain_error("solve_root: p >= 2 required");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("solve_root: 0 < alpha < 1 required");
  }
  const double slope = std::pow(static_cast<double>(p), alpha);
  auto h = [&](double y) {
    return 1.0 - std::pow(1.0 - y, p) - slope * y;
  };
  // Concavity plus h'(0) > 0 guarantee one crossing; if h stays positive
  // through y = 1 the root is clamped there.
  if (h(1.0) > 0.0) return 1.0;
  double lo = 1e-15, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BudgetThreshold budget_threshold(const PowerLawModel& model, int p) {
  check_model(model);
  const double y_star = solve_root(p, model.alpha);
  const double v_p =
      static_cast<double>(p) * std::pow(y_star / model.c, 1.0 / model.alpha);
  return BudgetThreshold{v_p, std::min(v_p, 1.0)};
}

double v2_taylor_approximation(double alpha, double c) {
  return 4.0 * std::log(2.0) * (1.0 - alpha) / c;
}

PowerLawModel fit_power_law(
    const std::vector<std::pair<double, double>>& xq) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [x, q] : xq) {
    if (!(x > 0.0) || !(q > 0.0)) continue;
    const double lx = std::log(x);
    const double ly = std::log(q);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("fit_power_law: need two usable points");
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-14) {
    throw std::invalid_argument("fit_power_law: degenerate x values");
  }
  const double alpha = (n * sxy - sx * sy) / denom;
  const double log_c = (sy - alpha * sx) / n;
  return PowerLawModel{std::exp(log_c), alpha};
}

}  // namespace seekbench::theory
