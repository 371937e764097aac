#pragma once

#include <algorithm>
#include <utility>

namespace rlqas::env {

/// Shaped improvement term: max((c_prev - c_t) / (c_prev - e_min), -1),
/// with the denominator floored at 1e-12 to survive c_prev <= e_min under
/// noise.
inline double shaped_improvement(double c_prev, double c_t, double e_min) {
  const double denom = std::max(c_prev - e_min, 1e-12);
  return std::max((c_prev - c_t) / denom, -1.0);
}

/// Cost-threshold reward: +5 on success (c_t <= zeta), -5 on running out of
/// steps, otherwise the shaped improvement term.
inline double threshold_reward(double c_prev, double c_t, double e_min, double zeta,
                               int t, int d_max) {
  if (c_t <= zeta) return 5.0;
  if (t >= d_max) return -5.0;
  return shaped_improvement(c_prev, c_t, e_min);
}

/// Same branch structure with an externally supplied success condition
/// (used by the classifier task, whose trigger is the training error).
inline double threshold_reward_with_success(double c_prev, double c_t, double e_min,
                                            bool success, int t, int d_max) {
  if (success) return 5.0;
  if (t >= d_max) return -5.0;
  return shaped_improvement(c_prev, c_t, e_min);
}

/// Fidelity reward: (big_reward, success) once fidelity reaches the
/// threshold, otherwise the fidelity itself.
inline std::pair<double, bool> state_prep_reward(double fidelity, double threshold,
                                                 double big_reward) {
  if (fidelity >= threshold) return {big_reward, true};
  return {fidelity, false};
}

/// Optional success-threshold schedule; disabled keeps zeta at zeta_final.
struct CurriculumTracker {
  bool enabled = false;
  double zeta = 0.0;        // current threshold
  double zeta_final = 0.0;
  double decay = 0.5;

  static CurriculumTracker fixed(double zeta_final) {
    return {false, zeta_final, zeta_final, 0.5};
  }
  static CurriculumTracker scheduled(double zeta0, double zeta_final, double decay) {
    return {true, zeta0, zeta_final, decay};
  }

  double update(bool episode_success) {
    if (enabled && episode_success) zeta = std::max(zeta_final, zeta * decay);
    return zeta;
  }
};

}  // namespace rlqas::env
