#pragma once

#include <cstdint>
#include <vector>

#include "rlqas/env/action_space.hpp"
#include "rlqas/env/circuit.hpp"
#include "rlqas/env/observation.hpp"
#include "rlqas/env/rewards.hpp"
#include "rlqas/problems/task.hpp"

namespace rlqas::env {

struct StepInfo {
  double cost = 0.0;            // task cost C_t after optimization
  double success_metric = 0.0;  // quantity compared against zeta
  int depth = 0;
  int gate_count = 0;
  int optimizer_evals = 0;
};

struct StepOutcome {
  QasObservation observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

/// VQSD cost functional on the already-transformed state:
/// Tr(rho^2) - Tr(dephase(rho')^2). Zero iff rho' is diagonal (for unitary
/// transformations of rho).
double vqsd_cost_value(const qsim::DensityMatrix& rho,
                       const qsim::DensityMatrix& transformed);

/// Circuit-structure search environment for one task. Each step places a
/// gate, re-optimizes all rotation angles under the task budget, and scores
/// the resulting circuit.
class QasEnv {
 public:
  explicit QasEnv(problems::TaskSpec task);

  const problems::TaskSpec& task() const { return task_; }
  const ActionSpace& action_space() const { return action_space_; }
  std::size_t observation_size() const;
  const CircuitProgram& circuit() const { return circuit_; }
  int t() const { return t_; }
  double current_zeta() const { return curriculum_.zeta; }

  QasObservation reset(std::uint64_t seed = 0);
  std::vector<std::uint8_t> legal_action_mask() const;
  bool is_action_legal(int action) const;
  StepOutcome step(int action);

  /// Curriculum hook; call once per finished episode.
  void episode_finished(bool success) { curriculum_.update(success); }

  /// Task cost of an arbitrary circuit under this task's noise mode.
  double evaluate_cost(const CircuitProgram& c) const;
  /// Error metric E used in run records (|E-E_min|, VQSD cost,
  /// 1 - test accuracy, or 1 - fidelity, by task kind).
  double error_metric(const CircuitProgram& c) const;
  /// Classifier accuracy on the train or test split (VQC tasks only).
  double vqc_accuracy(const CircuitProgram& c, bool test_split) const;
  double state_fidelity(const CircuitProgram& c) const;

  double e_min() const { return e_min_; }
  double initial_cost() const { return c0_; }

 private:
  problems::TaskSpec task_;
  ActionSpace action_space_;
  CircuitProgram circuit_;
  int t_ = 0;
  double prev_cost_ = 0.0;
  double c0_ = 0.0;
  double e_min_ = 0.0;
  CurriculumTracker curriculum_;
  bool done_ = false;

  // Cached per-task data.
  Eigen::MatrixXcd dense_h_;                       // VQE
  double target_purity_ = 0.0;                     // VQSD
  std::vector<qsim::Statevector> encoded_train_;   // VQC noiseless
  std::vector<qsim::Statevector> encoded_test_;
  std::vector<qsim::DensityMatrix> encoded_train_dm_;  // VQC noisy
  std::vector<qsim::DensityMatrix> encoded_test_dm_;

  double vqe_cost(const CircuitProgram& c) const;
  double vqsd_cost(const CircuitProgram& c) const;
  std::pair<double, double> vqc_cost_accuracy(const CircuitProgram& c,
                                              bool test_split) const;
  double cost_feature(double cost) const;
  double success_metric_of(const CircuitProgram& c, double cost) const;
  bool gate_would_be_redundant(const qsim::Gate& g) const;
};

}  // namespace rlqas::env
