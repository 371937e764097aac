#include "rlqas/env/observation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlqas::env {

namespace {

// 3-bit codes for the non-parameterized single-qubit gate set.
int fixed_gate_code(qsim::GateKind k) {
  switch (k) {
    case qsim::GateKind::X: return 1;
    case qsim::GateKind::Y: return 2;
    case qsim::GateKind::Z: return 3;
    case qsim::GateKind::H: return 4;
    case qsim::GateKind::T: return 5;
    default: throw std::invalid_argument("not a fixed single-qubit gate");
  }
}

qsim::GateKind fixed_gate_from_code(int code) {
  switch (code) {
    case 1: return qsim::GateKind::X;
    case 2: return qsim::GateKind::Y;
    case 3: return qsim::GateKind::Z;
    case 4: return qsim::GateKind::H;
    case 5: return qsim::GateKind::T;
    default: throw std::runtime_error("invalid gate code in observation");
  }
}

int rotation_row(qsim::GateKind k) {
  switch (k) {
    case qsim::GateKind::RX: return 0;
    case qsim::GateKind::RY: return 1;
    case qsim::GateKind::RZ: return 2;
    default: throw std::invalid_argument("not a rotation gate");
  }
}

}  // namespace

std::uint32_t observation_flat_index(int moment, int row, int col, int n_qubits) {
  return static_cast<std::uint32_t>((moment * (n_qubits + 3) + row) * n_qubits + col);
}

void QasObservation::to_dense(std::vector<double>& out) const {
  out.assign(input_size(), 0.0);
  for (auto idx : set_indices) out[idx] = 1.0;
  out.back() = cost_feature;
}

std::vector<double> QasObservation::to_dense() const {
  std::vector<double> out;
  to_dense(out);
  return out;
}

QasObservation encode_observation(const CircuitProgram& circuit, int d_max,
                                  bool parameterized, double cost_feature) {
  QasObservation obs;
  obs.d_max = d_max;
  obs.n_qubits = circuit.n_qubits();
  obs.parameterized = parameterized;
  obs.cost_feature = cost_feature;
  const int n = circuit.n_qubits();
  const auto& gates = circuit.gates();
  const auto& moments = circuit.moments();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    const int m = moments[i];
    if (m >= d_max) throw std::runtime_error("circuit depth exceeds observation d_max");
    if (g.kind == qsim::GateKind::CX) {
      obs.set_indices.push_back(observation_flat_index(m, g.q0, g.q1, n));
    } else if (parameterized) {
      obs.set_indices.push_back(
          observation_flat_index(m, n + rotation_row(g.kind), g.q0, n));
    } else {
      const int code = fixed_gate_code(g.kind);
      for (int bit = 0; bit < 3; ++bit)
        if (code & (1 << bit))
          obs.set_indices.push_back(observation_flat_index(m, n + bit, g.q0, n));
    }
  }
  std::sort(obs.set_indices.begin(), obs.set_indices.end());
  return obs;
}

std::vector<DecodedGate> decode_observation(const QasObservation& obs) {
  const int n = obs.n_qubits;
  const int rows = n + 3;
  // (moment, row, col) triples from flat indices.
  std::vector<DecodedGate> out;
  std::vector<std::vector<int>> code(static_cast<std::size_t>(obs.d_max),
                                     std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto flat : obs.set_indices) {
    const int col = static_cast<int>(flat % static_cast<std::uint32_t>(n));
    const int rest = static_cast<int>(flat / static_cast<std::uint32_t>(n));
    const int row = rest % rows;
    const int moment = rest / rows;
    if (row < n) {
      out.push_back({qsim::Gate::cx(row, col), moment});
    } else if (obs.parameterized) {
      static const qsim::GateKind kinds[3] = {qsim::GateKind::RX, qsim::GateKind::RY,
                                              qsim::GateKind::RZ};
      out.push_back({qsim::Gate::single(kinds[row - n], col), moment});
    } else {
      code[static_cast<std::size_t>(moment)][static_cast<std::size_t>(col)] |=
          1 << (row - n);
    }
  }
  if (!obs.parameterized) {
    for (int m = 0; m < obs.d_max; ++m)
      for (int q = 0; q < n; ++q) {
        const int c = code[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)];
        if (c != 0)
          out.push_back({qsim::Gate::single(fixed_gate_from_code(c), q), m});
      }
  }
  std::sort(out.begin(), out.end(), [](const DecodedGate& a, const DecodedGate& b) {
    if (a.moment != b.moment) return a.moment < b.moment;
    return a.gate.q0 < b.gate.q0;
  });
  return out;
}

}  // namespace rlqas::env
