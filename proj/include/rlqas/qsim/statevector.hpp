#pragma once

#include <complex>
#include <vector>

#include "rlqas/qsim/gate.hpp"

namespace rlqas::qsim {

/// Pure state on n qubits (2 <= n <= 8 in this project, enforced loosely).
/// Basis convention: qubit 0 is the most significant bit of the basis index,
/// so |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... + q_{n-1}.
class Statevector {
 public:
  explicit Statevector(int n_qubits);

  static Statevector basis_state(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::complex<double>& amp(std::size_t i) { return amps_[i]; }
  const std::complex<double>& amp(std::size_t i) const { return amps_[i]; }
  const std::vector<std::complex<double>>& amps() const { return amps_; }
  std::vector<std::complex<double>>& amps() { return amps_; }

  void apply(const Gate& g);

  double norm() const;
  void normalize();

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// |<target|state>|^2
double fidelity(const Statevector& state, const Statevector& target);

}  // namespace rlqas::qsim
