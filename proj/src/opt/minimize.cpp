#include "rlqas/opt/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rlqas::opt {

const char* optimizer_name() { return "nelder-mead"; }

namespace {

struct Budget {
  const CostFn& fn;
  int limit;
  int used = 0;
  std::vector<double> best_x;
  double best_f = std::numeric_limits<double>::infinity();

  bool exhausted() const { return used >= limit; }

  double eval(const std::vector<double>& x) {
    ++used;
    const double f = fn(x);
    if (!std::isfinite(f)) {
      std::ostringstream msg;
      msg << "cost function returned non-finite value at [";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
      msg << "]";
      throw std::runtime_error(msg.str());
    }
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    return f;
  }
};

}  // namespace

OptimizeResult minimize(const CostFn& cost_fn, const std::vector<double>& initial,
                        int budget, std::uint64_t /*seed*/) {
  if (budget < 1) throw std::invalid_argument("optimizer budget must be >= 1");
  Budget b{cost_fn, budget};

  const std::size_t n = initial.size();
  b.eval(initial);
  if (n == 0 || b.exhausted())
    return {b.best_x, b.best_f, b.used};

  // Initial simplex: initial point plus a step along each coordinate.
  constexpr double kStep = 0.25;
  std::vector<std::vector<double>> simplex{initial};
  std::vector<double> fvals{b.best_f};
  for (std::size_t i = 0; i < n && !b.exhausted(); ++i) {
    auto x = initial;
    x[i] += kStep;
    simplex.push_back(x);
    fvals.push_back(b.eval(x));
  }
  if (simplex.size() < n + 1)  // budget ran out while seeding
    return {b.best_x, b.best_f, b.used};

  constexpr double kAlpha = 1.0;  // reflection
  constexpr double kGamma = 2.0;  // expansion
  constexpr double kRho = 0.5;    // contraction
  constexpr double kSigma = 0.5;  // shrink

  std::vector<std::size_t> order(n + 1);
  while (!b.exhausted()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t c) { return fvals[a] < fvals[c]; });
    const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = centroid[i] + t * (centroid[i] - simplex[worst][i]);
      return x;
    };

    const auto xr = blend(kAlpha);
    const double fr = b.eval(xr);
    if (fr < fvals[best]) {
      if (!b.exhausted()) {
        const auto xe = blend(kAlpha * kGamma);
        const double fe = b.eval(xe);
        if (fe < fr) {
          simplex[worst] = xe;
          fvals[worst] = fe;
          continue;
        }
      }
      simplex[worst] = xr;
      fvals[worst] = fr;
      continue;
    }
    if (fr < fvals[second_worst]) {
      simplex[worst] = xr;
      fvals[worst] = fr;
      continue;
    }
    if (b.exhausted()) break;
    const bool outside = fr < fvals[worst];
    const auto xc = blend(outside ? kAlpha * kRho : -kRho);
    const double fc = b.eval(xc);
    if (fc < std::min(fr, fvals[worst])) {
      simplex[worst] = xc;
      fvals[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t k = 0; k <= n && !b.exhausted(); ++k) {
      if (k == best) continue;
      for (std::size_t i = 0; i < n; ++i)
        simplex[k][i] = simplex[best][i] + kSigma * (simplex[k][i] - simplex[best][i]);
      fvals[k] = b.eval(simplex[k]);
    }
  }
  return {b.best_x, b.best_f, b.used};
}

}  // namespace rlqas::opt
