#pragma once

#include <string>

#include "rlqas/qsim/pauli.hpp"

namespace rlqas::problems {

/// Loads a Hamiltonian from a JSON file:
///   {"name": str?, "n_qubits": int,
///    "terms": [[coefficient, "IXYZ..."], ...],
///    "ground_energy": number?}
/// If ground_energy is absent it is computed by dense diagonalization
/// (n <= 8 only); if present and n <= 8 it is validated within 1e-9.
qsim::PauliHamiltonian load_hamiltonian(const std::string& path);

qsim::PauliHamiltonian hamiltonian_from_json_text(const std::string& text);

std::string hamiltonian_to_json_text(const qsim::PauliHamiltonian& h);

void save_hamiltonian(const qsim::PauliHamiltonian& h, const std::string& path);

}  // namespace rlqas::problems
