#include "rlqas/qsim/density_matrix.hpp"

#include <cmath>

namespace rlqas::qsim {

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 8)
    throw std::invalid_argument("density matrix supports 1..8 qubits");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  m_ = Eigen::MatrixXcd::Zero(d, d);
  m_(0, 0) = 1.0;
}

DensityMatrix DensityMatrix::from_statevector(const Statevector& s) {
  DensityMatrix rho(s.n_qubits());
  const auto d = static_cast<Eigen::Index>(s.dim());
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = s.amp(static_cast<std::size_t>(i));
  rho.m_ = v * v.adjoint();
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, Eigen::MatrixXcd m) {
  DensityMatrix rho(n_qubits);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("density matrix dimension mismatch");
  rho.m_ = std::move(m);
  return rho;
}

void DensityMatrix::apply_1q_left(const Eigen::Matrix2cd& u, int q) {
  const std::size_t d = dim();
  const std::size_t mask = std::size_t{1} << (n_qubits_ - 1 - q);
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t i = 0; i < d; ++i) {
      if (i & mask) continue;
      const auto a0 = m_(i, col);
      const auto a1 = m_(i | mask, col);
      m_(i, col) = u(0, 0) * a0 + u(0, 1) * a1;
      m_(i | mask, col) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void DensityMatrix::apply_1q_right(const Eigen::Matrix2cd& u, int q) {
  const std::size_t d = dim();
  const std::size_t mask = std::size_t{1} << (n_qubits_ - 1 - q);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j & mask) continue;
      const auto b0 = m_(row, j);
      const auto b1 = m_(row, j | mask);
      m_(row, j) = b0 * std::conj(u(0, 0)) + b1 * std::conj(u(0, 1));
      m_(row, j | mask) = b0 * std::conj(u(1, 0)) + b1 * std::conj(u(1, 1));
    }
  }
}

void DensityMatrix::apply_cx_left(int c, int t) {
  const std::size_t d = dim();
  const std::size_t cmask = std::size_t{1} << (n_qubits_ - 1 - c);
  const std::size_t tmask = std::size_t{1} << (n_qubits_ - 1 - t);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t i = 0; i < d; ++i)
      if ((i & cmask) && !(i & tmask)) std::swap(m_(i, col), m_(i | tmask, col));
}

void DensityMatrix::apply_cx_right(int c, int t) {
  const std::size_t d = dim();
  const std::size_t cmask = std::size_t{1} << (n_qubits_ - 1 - c);
  const std::size_t tmask = std::size_t{1} << (n_qubits_ - 1 - t);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t j = 0; j < d; ++j)
      if ((j & cmask) && !(j & tmask)) std::swap(m_(row, j), m_(row, j | tmask));
}

void DensityMatrix::apply(const Gate& g) {
  validate_gate(g, n_qubits_);
  if (g.kind == GateKind::CX) {
    apply_cx_left(g.q0, g.q1);
    apply_cx_right(g.q0, g.q1);
    return;
  }
  const Eigen::Matrix2cd u = gate_matrix_1q(g.kind, g.angle);
  apply_1q_left(u, g.q0);
  apply_1q_right(u, g.q0);
}

void DensityMatrix::depolarize(const std::vector<int>& qubits, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing probability must be in [0,1]");
  if (qubits.empty() || qubits.size() > 2)
    throw std::invalid_argument("depolarize acts on 1 or 2 qubits");
  for (int q : qubits)
    if (q < 0 || q >= n_qubits_) throw std::invalid_argument("qubit index out of range");
  if (p == 0.0) return;

  static const GateKind paulis[3] = {GateKind::X, GateKind::Y, GateKind::Z};
  const Eigen::MatrixXcd original = m_;
  const int k = static_cast<int>(qubits.size());
  const int n_terms = (k == 1) ? 3 : 15;
  Eigen::MatrixXcd acc = (1.0 - p) * original;
  const double w = p / n_terms;

  if (k == 1) {
    for (GateKind pk : paulis) {
      m_ = original;
      apply(Gate::single(pk, qubits[0]));
      acc += w * m_;
    }
  } else {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (a == 0 && b == 0) continue;
        m_ = original;
        if (a != 0) apply(Gate::single(paulis[a - 1], qubits[0]));
        if (b != 0) apply(Gate::single(paulis[b - 1], qubits[1]));
        acc += w * m_;
      }
    }
  }
  m_ = std::move(acc);
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix DensityMatrix::dephased() const {
  DensityMatrix out(n_qubits_);
  out.m_ = m_.diagonal().asDiagonal();
  return out;
}

double DensityMatrix::trace_real() const { return m_.trace().real(); }

bool DensityMatrix::is_valid(double tol) const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m_.trace().real() - 1.0) > tol || std::abs(m_.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m_ + m_.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

double fidelity(const DensityMatrix& state, const Statevector& target) {
  if (state.n_qubits() != target.n_qubits())
    throw std::invalid_argument("fidelity: qubit count mismatch");
  const auto d = static_cast<Eigen::Index>(target.dim());
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = target.amp(static_cast<std::size_t>(i));
  return (v.adjoint() * state.matrix() * v)(0, 0).real();
}

}  // namespace rlqas::qsim
