#include "rlqas/problems/targets.hpp"

#include <cmath>

namespace rlqas::problems {

qsim::Statevector ghz_target(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ target needs at least 2 qubits");
  qsim::Statevector s(n_qubits);
  const double a = 1.0 / std::sqrt(2.0);
  s.amp(0) = a;
  s.amp(s.dim() - 1) = a;
  return s;
}

}  // namespace rlqas::problems
