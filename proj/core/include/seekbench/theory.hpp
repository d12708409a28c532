#pragma once

#include <utility>
#include <vector>

namespace seekbench::theory {

// Success probability model q(x) = c * x^alpha on x in (0, 1],
// with 0 < c <= 1 and 0 < alpha < 1 (strictly sublinear).
struct PowerLawModel {
  double c = 1.0;
  double alpha = 0.5;

  double q(double x) const;
};

// Whether splitting budget x into p independent slices beats one run:
//   1 - (1 - q(x/p))^p > q(x), strict.
bool benefit_condition(const PowerLawModel& model, double x, int p);

// Unique positive root of h(y) = 1 - (1-y)^p - p^alpha * y on (0, 1]:
// h(0) = 0, h'(0) = p - p^alpha > 0, h strictly concave, so the crossing
// is unique. Bisection to 1e-12.
double solve_root(int p, double alpha);

struct BudgetThreshold {
  double v_p = 0.0;       // p * (y* / c)^(1/alpha), may exceed 1
  double clamped = 0.0;   // min(v_p, 1): budgets live in (0, 1]
};

// Splitting helps exactly for x < v_p.
BudgetThreshold budget_threshold(const PowerLawModel& model, int p);

// Loose closed-form for p = 2 near alpha -> 1.
double v2_taylor_approximation(double alpha, double c);

// Least-squares fit of log q against log x over empirical success rates;
// points with q <= 0 are skipped. Returns a model with fitted (c, alpha).
PowerLawModel fit_power_law(const std::vector<std::pair<double, double>>& xq);

}  // namespace seekbench::theory
