#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rlqas/qsim/gate.hpp"
#include "rlqas/qsim/statevector.hpp"

namespace rlqas::qsim {

/// Per-gate depolarizing noise strengths. p1 applies after single-qubit
/// gates, p2 after two-qubit gates, on the qubits the gate touched.
struct NoiseConfig {
  double p1 = 0.0;
  double p2 = 0.0;
  bool enabled = false;

  void validate() const {
    if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
      throw std::invalid_argument("depolarizing probabilities must be in [0,1]");
  }
};

/// Mixed state on n qubits, same basis convention as Statevector.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);  // |0..0><0..0|
  static DensityMatrix from_statevector(const Statevector& s);
  static DensityMatrix from_matrix(int n_qubits, Eigen::MatrixXcd m);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

  void apply(const Gate& g);  // rho <- U rho U^dag

  /// Uniform depolarizing channel over the 4^k - 1 non-identity Paulis on
  /// the given qubits (k = 1 or 2).
  void depolarize(const std::vector<int>& qubits, double p);

  double purity() const;         // Tr(rho^2)
  DensityMatrix dephased() const;  // off-diagonal entries zeroed
  double trace_real() const;

  /// Hermitian within tol, unit trace within tol, eigenvalues >= -tol.
  bool is_valid(double tol = 1e-10) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd m_;

  void apply_1q_left(const Eigen::Matrix2cd& u, int q);   // rho <- U rho
  void apply_1q_right(const Eigen::Matrix2cd& u, int q);  // rho <- rho U^dag
  void apply_cx_left(int c, int t);
  void apply_cx_right(int c, int t);
};

/// <target| rho |target>
double fidelity(const DensityMatrix& state, const Statevector& target);

}  // namespace rlqas::qsim
