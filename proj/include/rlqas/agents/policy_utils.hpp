#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "rlqas/rng.hpp"

namespace rlqas::agents {

/// Argmax over legal entries, ties broken by the lowest index. Requires at
/// least one legal action.
inline int argmax_masked(const Eigen::VectorXd& values,
                         const std::vector<std::uint8_t>& mask) {
  int best = -1;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < values.size(); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    if (values(i) > best_v) {
      best_v = values(i);
      best = i;
    }
  }
  return best;
}

/// Softmax restricted to legal entries; illegal entries get probability 0.
inline Eigen::VectorXd masked_softmax(const Eigen::VectorXd& logits,
                                      const std::vector<std::uint8_t>& mask) {
  double max_legal = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < logits.size(); ++i)
    if (mask[static_cast<std::size_t>(i)]) max_legal = std::max(max_legal, logits(i));
  Eigen::VectorXd p = Eigen::VectorXd::Zero(logits.size());
  double total = 0.0;
  for (int i = 0; i < logits.size(); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    p(i) = std::exp(logits(i) - max_legal);
    total += p(i);
  }
  p /= total;
  return p;
}

inline int sample_categorical(const Eigen::VectorXd& probs, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  int last = -1;
  for (int i = 0; i < probs.size(); ++i) {
    if (probs(i) <= 0.0) continue;
    acc += probs(i);
    last = i;
    if (u < acc) return i;
  }
  return last;  // guard against rounding at acc ~ 1
}

inline double entropy_of(const Eigen::VectorXd& probs) {
  double h = 0.0;
  for (int i = 0; i < probs.size(); ++i)
    if (probs(i) > 0.0) h -= probs(i) * std::log(probs(i));
  return h;
}

/// Q(s,a) = V + A_a - mean(A) over the action axis.
inline Eigen::VectorXd dueling_aggregate(double value,
                                         const Eigen::VectorXd& advantages) {
  return (advantages.array() - advantages.mean() + value).matrix();
}

}  // namespace rlqas::agents
