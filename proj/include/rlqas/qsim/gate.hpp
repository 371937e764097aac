#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace rlqas::qsim {

enum class GateKind : uint8_t { RX, RY, RZ, CX, X, Y, Z, H, T };

constexpr bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// One circuit instruction. For CX, q0 is the control and q1 the target;
/// single-qubit gates use q0 only. angle is meaningful only for rotations.
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;

  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  static Gate cx(int control, int target) { return {GateKind::CX, control, target, 0.0}; }
  static Gate single(GateKind k, int q) { return {k, q, -1, 0.0}; }

  bool touches(int q) const { return q == q0 || (kind == GateKind::CX && q == q1); }
};

/// 2x2 matrix of a single-qubit gate kind (angle ignored for fixed gates).
Eigen::Matrix2cd gate_matrix_1q(GateKind kind, double angle);

/// 4x4 CX matrix in the convention "first tensor factor = control".
Eigen::Matrix4cd cx_matrix();

void validate_gate(const Gate& g, int n_qubits);

}  // namespace rlqas::qsim
