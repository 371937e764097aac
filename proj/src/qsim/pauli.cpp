#include "rlqas/qsim/pauli.hpp"

#include <bit>
#include <cmath>

namespace rlqas::qsim {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct PauliAction {
  std::size_t flip_mask = 0;                 // X/Y positions flip the bit
  // phase of P|i> as a function of the Y/Z bits of i, see apply below
  std::size_t y_mask = 0;
  std::size_t z_mask = 0;
  int n_y = 0;
};

PauliAction compile_term(const std::string& paulis, int n_qubits) {
  PauliAction a;
  for (int q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - q);
    switch (paulis[static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': a.flip_mask |= bit; break;
      case 'Y':
        a.flip_mask |= bit;
        a.y_mask |= bit;
        ++a.n_y;
        break;
      case 'Z': a.z_mask |= bit; break;
      default: throw std::invalid_argument("pauli string must use I,X,Y,Z");
    }
  }
  return a;
}

// P|i> = phase(i) |i ^ flip_mask>.
// X|b> = |1-b>; Y|b> = i(-1)^b |1-b>; Z|b> = (-1)^b |b>.
std::complex<double> term_phase(const PauliAction& a, std::size_t i) {
  const int y_ones = std::popcount(i & a.y_mask);
  const int z_ones = std::popcount(i & a.z_mask);
  std::complex<double> phase = ((y_ones + z_ones) % 2 == 0) ? 1.0 : -1.0;
  switch (a.n_y % 4) {
    case 0: break;
    case 1: phase *= kI; break;
    case 2: phase *= -1.0; break;
    case 3: phase *= -kI; break;
  }
  return phase;
}

}  // namespace

void PauliHamiltonian::validate() const {
  if (n_qubits < 1 || n_qubits > 16)
    throw std::invalid_argument("hamiltonian qubit count out of range");
  for (const auto& t : terms) {
    if (static_cast<int>(t.paulis.size()) != n_qubits)
      throw std::invalid_argument("pauli string length must equal n_qubits");
    if (!std::isfinite(t.coefficient))
      throw std::invalid_argument("hamiltonian coefficient must be finite");
    compile_term(t.paulis, n_qubits);  // validates characters
  }
}

double expectation(const Statevector& state, const PauliHamiltonian& h) {
  if (state.n_qubits() != h.n_qubits)
    throw std::invalid_argument("expectation: qubit count mismatch");
  std::complex<double> total{0.0, 0.0};
  const std::size_t dim = state.dim();
  for (const auto& term : h.terms) {
    const PauliAction a = compile_term(term.paulis, h.n_qubits);
    std::complex<double> e{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t j = i ^ a.flip_mask;
      e += std::conj(state.amp(j)) * term_phase(a, i) * state.amp(i);
    }
    total += term.coefficient * e;
  }
  if (std::abs(total.imag()) > 1e-9)
    throw std::runtime_error("expectation has non-negligible imaginary part");
  return total.real();
}

double expectation(const DensityMatrix& state, const PauliHamiltonian& h) {
  if (state.n_qubits() != h.n_qubits)
    throw std::invalid_argument("expectation: qubit count mismatch");
  std::complex<double> total{0.0, 0.0};
  const auto& m = state.matrix();
  const std::size_t dim = state.dim();
  for (const auto& term : h.terms) {
    const PauliAction a = compile_term(term.paulis, h.n_qubits);
    std::complex<double> e{0.0, 0.0};
    // Tr(rho P) = sum_i rho(i, i ^ flip) * phase(i)
    for (std::size_t i = 0; i < dim; ++i)
      e += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ a.flip_mask)) *
           term_phase(a, i);
    total += term.coefficient * e;
  }
  if (std::abs(total.imag()) > 1e-9)
    throw std::runtime_error("expectation has non-negligible imaginary part");
  return total.real();
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
  if (h.n_qubits > 8) throw std::invalid_argument("dense_matrix limited to 8 qubits");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_qubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms) {
    const PauliAction a = compile_term(term.paulis, h.n_qubits);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto j = static_cast<Eigen::Index>(static_cast<std::size_t>(i) ^ a.flip_mask);
      m(j, i) += term.coefficient * term_phase(a, static_cast<std::size_t>(i));
    }
  }
  return m;
}

double min_eigenvalue(const PauliHamiltonian& h) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace rlqas::qsim
