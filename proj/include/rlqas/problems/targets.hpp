#pragma once

#include "rlqas/qsim/statevector.hpp"

namespace rlqas::problems {

/// (|0...0> + |1...1>)/sqrt(2), n >= 2.
qsim::Statevector ghz_target(int n_qubits);

}  // namespace rlqas::problems
