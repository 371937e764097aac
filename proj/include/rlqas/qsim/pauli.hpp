#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rlqas/qsim/density_matrix.hpp"
#include "rlqas/qsim/statevector.hpp"

namespace rlqas::qsim {

struct PauliTerm {
  double coefficient = 0.0;
  std::string paulis;  // length n_qubits, characters over {I,X,Y,Z}

  bool operator==(const PauliTerm&) const = default;
};

/// Weighted sum of Pauli strings, H = sum_j c_j P_j, with the exact ground
/// energy cached once known.
struct PauliHamiltonian {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
  double ground_energy = 0.0;
  std::string name;

  void validate() const;  // string lengths, finite coefficients
};

/// sum_j c_j <psi|P_j|psi>; throws if the imaginary residue exceeds 1e-9.
double expectation(const Statevector& state, const PauliHamiltonian& h);

/// sum_j c_j Tr(rho P_j), same residue check.
double expectation(const DensityMatrix& state, const PauliHamiltonian& h);

/// Dense 2^n x 2^n matrix of the Hamiltonian (n <= 8).
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

/// Minimum eigenvalue by exact diagonalization of the dense matrix.
double min_eigenvalue(const PauliHamiltonian& h);

}  // namespace rlqas::qsim
