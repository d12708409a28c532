#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seekbench/envcore.hpp"
#include "seekbench/rng.hpp"

namespace seekbench::maxsat {

// A literal: variable index plus required truth value. A clause is the
// AND of its literals (satisfied only when every literal holds).
struct Literal {
  int var = 0;
  bool positive = true;
};

using Clause = std::vector<Literal>;

struct GenParams {
  int n = 15;        // variables
  int m = 120;       // clauses
  int k_gold = 4;    // gold-clause arity
  int k_other = 2;   // arity of the remaining clauses
  int w_gold = 80;   // gold repetition count
  std::uint64_t seed = 0;
};

struct Instance {
  int n = 0;
  int m = 0;
  int w_gold = 0;
  std::vector<Clause> clauses;  // gold copies first, canonical order
  std::vector<int> gold_vars;   // ascending
  std::vector<std::uint8_t> x_star;
  GenParams params;
};

// Construction: draw x* uniformly, pick the gold variable subset, repeat
// the gold clause w_gold times, then fill the remaining clauses from the
// non-gold variables (distinct within a clause). Every literal's polarity
// matches x*, so count_satisfied(x*) == m by construction.
Instance generate(const GenParams& params);

int count_satisfied(const Instance& instance, const std::vector<std::uint8_t>& x);

std::optional<std::string> validate(const Instance& instance,
                                    const std::vector<std::uint8_t>& x);

inline int max_clause_arity(const Instance& inst) {
  return std::max(inst.params.k_gold, inst.params.k_other);
}

}  // namespace seekbench::maxsat
