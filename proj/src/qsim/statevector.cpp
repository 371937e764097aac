#include "rlqas/qsim/statevector.hpp"

#include <cmath>

namespace rlqas::qsim {

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 12)
    throw std::invalid_argument("statevector supports 1..12 qubits");
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(int n_qubits, std::size_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw std::invalid_argument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

void Statevector::apply(const Gate& g) {
  validate_gate(g, n_qubits_);
  const std::size_t dim = amps_.size();
  if (g.kind == GateKind::CX) {
    // Swap amplitudes of target bit where the control bit is 1.
    const std::size_t cmask = std::size_t{1} << (n_qubits_ - 1 - g.q0);
    const std::size_t tmask = std::size_t{1} << (n_qubits_ - 1 - g.q1);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
    }
    return;
  }
  const Eigen::Matrix2cd u = gate_matrix_1q(g.kind, g.angle);
  const std::size_t mask = std::size_t{1} << (n_qubits_ - 1 - g.q0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::complex<double> a0 = amps_[i];
    const std::complex<double> a1 = amps_[i | mask];
    amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
    amps_[i | mask] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::normalize() {
  const double n = norm();
  if (n <= 0.0) throw std::runtime_error("cannot normalize zero state");
  for (auto& a : amps_) a /= n;
}

double fidelity(const Statevector& state, const Statevector& target) {
  if (state.n_qubits() != target.n_qubits())
    throw std::invalid_argument("fidelity: qubit count mismatch");
  std::complex<double> ov{0.0, 0.0};
  for (std::size_t i = 0; i < state.dim(); ++i)
    ov += std::conj(target.amp(i)) * state.amp(i);
  return std::norm(ov);
}

}  // namespace rlqas::qsim
