// Shared helpers for the unit suites: deterministic random formula
// generation and small conveniences.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "nelab/formula.hpp"

namespace nelab::testutil {

// Deterministic random formula over the given variable pool. `budget`
// bounds the recursion; derived connectives are generated too so that the
// sugared renderer gets exercised on shapes it will re-sugar.
inline Formula random_formula(std::mt19937& rng, int budget,
                              const std::vector<std::string>& vars = {
                                  "p", "q", "r", "s_1"}) {
  std::uniform_int_distribution<int> pick_var(0,
                                              static_cast<int>(vars.size()) - 1);
  if (budget <= 0) return Formula::var(vars[pick_var(rng)]);
  std::uniform_int_distribution<int> pick_kind(0, 8);
  int k = pick_kind(rng);
  auto sub = [&](int shrink) {
    return random_formula(rng, budget - shrink, vars);
  };
  switch (k) {
    case 0: return Formula::var(vars[pick_var(rng)]);
    case 1: return Formula::star(sub(1));
    case 2: return Formula::tensor(sub(2), sub(2));
    case 3: return Formula::circ(sub(2), sub(2));
    case 4: return Formula::imp(sub(2), sub(2));
    case 5: return Formula::eqv(sub(3), sub(3));
    case 6: return Formula::neq(sub(3), sub(3));
    case 7: return Formula::oplus(sub(2), sub(2));
    default: return Formula::hook(sub(2), sub(2));
  }
}

}  // namespace nelab::testutil
