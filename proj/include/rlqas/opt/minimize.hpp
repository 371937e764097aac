#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rlqas::opt {

struct OptimizeResult {
  std::vector<double> best_params;
  double best_cost = 0.0;
  int evals_used = 0;
};

using CostFn = std::function<double(const std::vector<double>&)>;

/// Name of the method minimize() runs, recorded in run metadata.
const char* optimizer_name();

/// Derivative-free minimization under a hard budget of cost evaluations.
/// Nelder-Mead simplex with best-so-far tracking: the returned cost is the
/// minimum over every point evaluated, so it never exceeds the cost at
/// `initial`. Deterministic for fixed inputs; `seed` is accepted for
/// interface stability but the search itself uses no randomness.
OptimizeResult minimize(const CostFn& cost_fn, const std::vector<double>& initial,
                        int budget, std::uint64_t seed = 0);

}  // namespace rlqas::opt
