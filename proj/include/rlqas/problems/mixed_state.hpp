#pragma once

#include <cstdint>

#include "rlqas/qsim/density_matrix.hpp"

namespace rlqas::problems {

/// Seeded random mixed state: rho = G G^dag / Tr(G G^dag) with G a
/// 2^n x rank matrix of iid complex standard Gaussians.
qsim::DensityMatrix random_mixed_state(int n_qubits, int rank, std::uint64_t seed);

}  // namespace rlqas::problems
