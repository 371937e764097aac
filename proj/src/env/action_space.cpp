#include "rlqas/env/action_space.hpp"

#include <array>
#include <stdexcept>

namespace rlqas::env {

namespace {
constexpr std::array<qsim::GateKind, 3> kRotationKinds = {
    qsim::GateKind::RX, qsim::GateKind::RY, qsim::GateKind::RZ};
constexpr std::array<qsim::GateKind, 5> kFixedKinds = {
    qsim::GateKind::X, qsim::GateKind::Y, qsim::GateKind::Z, qsim::GateKind::H,
    qsim::GateKind::T};
}  // namespace

ActionSpace::ActionSpace(int n_qubits, bool parameterized)
    : n_qubits_(n_qubits), parameterized_(parameterized) {
  if (n_qubits < 2) throw std::invalid_argument("action space needs >= 2 qubits");
  n_single_kinds_ = parameterized ? 3 : 5;
  size_ = n_single_kinds_ * n_qubits + n_qubits * (n_qubits - 1);
}

qsim::Gate ActionSpace::decode(int action) const {
  if (action < 0 || action >= size_)
    throw std::invalid_argument("action index out of range");
  const int n_single = n_single_kinds_ * n_qubits_;
  if (action < n_single) {
    const int kind_idx = action / n_qubits_;
    const int q = action % n_qubits_;
    const qsim::GateKind kind =
        parameterized_ ? kRotationKinds[static_cast<std::size_t>(kind_idx)]
                       : kFixedKinds[static_cast<std::size_t>(kind_idx)];
    return qsim::Gate{kind, q, -1, 0.0};
  }
  // Ordered (control, target) pairs, control-major, skipping control==target.
  int pair = action - n_single;
  const int control = pair / (n_qubits_ - 1);
  int target = pair % (n_qubits_ - 1);
  if (target >= control) ++target;
  return qsim::Gate::cx(control, target);
}

int ActionSpace::encode(const qsim::Gate& g) const {
  if (g.kind == qsim::GateKind::CX) {
    const int t = (g.q1 > g.q0) ? g.q1 - 1 : g.q1;
    return n_single_kinds_ * n_qubits_ + g.q0 * (n_qubits_ - 1) + t;
  }
  int kind_idx = -1;
  if (parameterized_) {
    for (std::size_t i = 0; i < kRotationKinds.size(); ++i)
      if (kRotationKinds[i] == g.kind) kind_idx = static_cast<int>(i);
  } else {
    for (std::size_t i = 0; i < kFixedKinds.size(); ++i)
      if (kFixedKinds[i] == g.kind) kind_idx = static_cast<int>(i);
  }
  if (kind_idx < 0)
    throw std::invalid_argument("gate kind not part of this action space");
  return kind_idx * n_qubits_ + g.q0;
}

}  // namespace rlqas::env
