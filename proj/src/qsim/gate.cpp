#include "rlqas/qsim/gate.hpp"

#include <cmath>

namespace rlqas::qsim {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::T: return "T";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "RX") return GateKind::RX;
  if (name == "RY") return GateKind::RY;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CX") return GateKind::CX;
  if (name == "X") return GateKind::X;
  if (name == "Y") return GateKind::Y;
  if (name == "Z") return GateKind::Z;
  if (name == "H") return GateKind::H;
  if (name == "T") return GateKind::T;
  throw std::invalid_argument("unknown gate kind: " + name);
}

Eigen::Matrix2cd gate_matrix_1q(GateKind kind, double angle) {
  Eigen::Matrix2cd m;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (kind) {
    case GateKind::RX:
      m << c, -kI * s, -kI * s, c;
      return m;
    case GateKind::RY:
      m << c, -s, s, c;
      return m;
    case GateKind::RZ:
      m << std::exp(-kI * (angle / 2.0)), 0.0, 0.0, std::exp(kI * (angle / 2.0));
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0.0, -kI, kI, 0.0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::H:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::T:
      m << 1.0, 0.0, 0.0, std::exp(kI * (M_PI / 4.0));
      return m;
    case GateKind::CX:
      break;
  }
  throw std::invalid_argument("gate_matrix_1q: CX is not a single-qubit gate");
}

Eigen::Matrix4cd cx_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

void validate_gate(const Gate& g, int n_qubits) {
  if (g.q0 < 0 || g.q0 >= n_qubits)
    throw std::invalid_argument("gate qubit index out of range");
  if (g.kind == GateKind::CX) {
    if (g.q1 < 0 || g.q1 >= n_qubits)
      throw std::invalid_argument("gate qubit index out of range");
    if (g.q0 == g.q1) throw std::invalid_argument("CX requires distinct qubits");
  }
  if (is_rotation(g.kind) && !std::isfinite(g.angle))
    throw std::invalid_argument("rotation angle must be finite");
}

}  // namespace rlqas::qsim
