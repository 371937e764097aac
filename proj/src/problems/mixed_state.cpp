#include "rlqas/problems/mixed_state.hpp"

#include "rlqas/rng.hpp"

namespace rlqas::problems {

qsim::DensityMatrix random_mixed_state(int n_qubits, int rank, std::uint64_t seed) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  if (rank < 1 || rank > dim)
    throw std::invalid_argument("mixed state rank must be in [1, 2^n]");
  Rng rng(seed);
  Eigen::MatrixXcd g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j)
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return qsim::DensityMatrix::from_matrix(n_qubits, std::move(m));
}

}  // namespace rlqas::problems
