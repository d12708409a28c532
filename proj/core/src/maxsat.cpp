#include "seekbench/maxsat.hpp"

#include <algorithm>
#include <stdexcept>

namespace seekbench::maxsat {

namespace {

// Uniform k-subset of `pool`, ascending.
std::vector<int> sample_subset(const std::vector<int>& pool, int k, Rng& rng) {
  std::vector<int> copy = pool;
  for (int i = 0; i < k; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.below(copy.size() - static_cast<std::size_t>(i)));
    std::swap(copy[static_cast<std::size_t>(i)], copy[j]);
  }
  copy.resize(static_cast<std::size_t>(k));
  std::sort(copy.begin(), copy.end());
  return copy;
}

}  // namespace

Instance generate(const GenParams& p) {
  if (p.n < 1 || p.m < 1 || p.k_gold < 1 || p.k_other < 1) {
    throw std::invalid_argument("maxsat::generate: bad sizes");
  }
  if (p.w_gold > p.m) {
    throw std::invalid_argument("maxsat::generate: w_gold exceeds m");
  }
  if (p.k_gold + p.k_other > p.n) {
    throw std::invalid_argument(
        "maxsat::generate: other clauses need k_other distinct non-gold "
        "variables, so k_gold + k_other must not exceed n");
  }

  Rng rng(p.seed);
  Instance inst;
  inst.params = p;
  inst.n = p.n;
  inst.m = p.m;
  inst.w_gold = p.w_gold;

  inst.x_star.resize(static_cast<std::size_t>(p.n));
  for (auto& bit : inst.x_star) bit = rng.coin() ? 1 : 0;

  std::vector<int> all_vars(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) all_vars[static_cast<std::size_t>(i)] = i;
  inst.gold_vars = sample_subset(all_vars, p.k_gold, rng);

  auto clause_over = [&inst](const std::vector<int>& vars) {
    Clause c;
    c.reserve(vars.size());
    for (int v : vars) {
      c.push_back(Literal{v, inst.x_star[static_cast<std::size_t>(v)] != 0});
    }
    return c;
  };

  const Clause gold = clause_over(inst.gold_vars);
  inst.clauses.assign(static_cast<std::size_t>(p.w_gold), gold);

  std::vector<int> non_gold;
  for (int v : all_vars) {
    if (!std::binary_search(inst.gold_vars.begin(), inst.gold_vars.end(), v)) {
      non_gold.push_back(v);
    }
  }
  for (int i = 0; i < p.m - p.w_gold; ++i) {
    inst.clauses.push_back(clause_over(sample_subset(non_gold, p.k_other, rng)));
  }
  return inst;
}

int count_satisfied(const Instance& instance,
                    const std::vector<std::uint8_t>& x) {
  int count = 0;
  for (const Clause& clause : instance.clauses) {
    bool ok = true;
    for (const Literal& lit : clause) {
      if ((x[static_cast<std::size_t>(lit.var)] != 0) != lit.positive) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

std::optional<std::string> validate(const Instance& instance,
                                    const std::vector<std::uint8_t>& x) {
  if (static_cast<int>(x.size()) != instance.n) {
    return "assignment must list exactly n variables";
  }
  for (auto bit : x) {
    if (bit > 1) return "assignment values must be 0 or 1";
  }
  return std::nullopt;
}

}  // namespace seekbench::maxsat
