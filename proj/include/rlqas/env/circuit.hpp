#pragma once

#include <vector>

#include "rlqas/qsim/density_matrix.hpp"
#include "rlqas/qsim/gate.hpp"
#include "rlqas/qsim/statevector.hpp"

namespace rlqas::env {

/// Gate list with greedy earliest-slot moment scheduling. Rotation angles
/// live in `params` in gate order (non-rotation gates contribute no entry).
class CircuitProgram {
 public:
  explicit CircuitProgram(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<qsim::Gate>& gates() const { return gates_; }
  const std::vector<int>& moments() const { return moments_; }
  int gate_count() const { return static_cast<int>(gates_.size()); }

  /// 1 + max moment, 0 for the empty circuit.
  int depth() const;

  /// Earliest moment a gate touching these qubits would occupy if appended.
  int next_moment(const qsim::Gate& g) const;

  /// Last occupied moment of a qubit, -1 if untouched.
  int frontier(int qubit) const { return frontier_[static_cast<std::size_t>(qubit)]; }

  /// Gate index occupying (moment, qubit), -1 if free.
  int gate_at(int moment, int qubit) const;

  void append(const qsim::Gate& g);

  int param_count() const { return static_cast<int>(param_gate_index_.size()); }
  std::vector<double> params() const;
  void set_params(const std::vector<double>& p);

  /// Runs the circuit on |0..0> (angles from the gate list).
  qsim::Statevector simulate() const;
  void apply_to(qsim::Statevector& state) const;

  /// Density-matrix evolution from the given initial state; when noise is
  /// enabled a depolarizing channel follows each gate on its qubits.
  qsim::DensityMatrix simulate_density(const qsim::DensityMatrix& initial,
                                       const qsim::NoiseConfig& noise) const;

 private:
  int n_qubits_;
  std::vector<qsim::Gate> gates_;
  std::vector<int> moments_;
  std::vector<int> frontier_;
  std::vector<int> param_gate_index_;      // gate index of each parameter
  std::vector<std::vector<int>> grid_;     // [moment][qubit] -> gate index or -1
};

}  // namespace rlqas::env
