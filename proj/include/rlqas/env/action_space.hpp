#pragma once

#include <vector>

#include "rlqas/qsim/gate.hpp"

namespace rlqas::env {

/// Discrete gate-placement alphabet. Parameterized tasks use rotations plus
/// ordered CX pairs (3N + N(N-1) actions); the state-preparation task uses
/// the fixed gate set X,Y,Z,H,T plus CX pairs (5N + N(N-1)).
class ActionSpace {
 public:
  ActionSpace(int n_qubits, bool parameterized);

  int size() const { return size_; }
  int n_qubits() const { return n_qubits_; }
  bool parameterized() const { return parameterized_; }

  /// New rotation gates carry angle 0; fixed gates have none.
  qsim::Gate decode(int action) const;
  int encode(const qsim::Gate& g) const;

 private:
  int n_qubits_;
  bool parameterized_;
  int n_single_kinds_;
  int size_;
};

}  // namespace rlqas::env
