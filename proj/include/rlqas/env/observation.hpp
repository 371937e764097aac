#pragma once

#include <cstdint>
#include <vector>

#include "rlqas/env/circuit.hpp"

namespace rlqas::env {

/// Binary circuit-structure tensor of shape [d_max x (N+3) x N] plus one
/// scalar cost feature, stored sparsely (list of set flat indices).
///
/// Layout per moment m and qubit column q:
///   rows 0..N-1:   row c set iff a CX with control c targets q at moment m
///   rows N..N+2:   parameterized tasks: one-hot over RX/RY/RZ acting on q;
///                  state-prep task: 3-bit code (LSB at row N) of the gate
///                  kind, X=1, Y=2, Z=3, H=4, T=5
struct QasObservation {
  int d_max = 0;
  int n_qubits = 0;
  bool parameterized = true;
  std::vector<std::uint32_t> set_indices;  // sorted flat indices into the tensor
  double cost_feature = 0.0;

  std::size_t tensor_size() const {
    return static_cast<std::size_t>(d_max) * (n_qubits + 3) * n_qubits;
  }
  /// Dense network input: flattened tensor followed by the cost feature.
  std::size_t input_size() const { return tensor_size() + 1; }

  void to_dense(std::vector<double>& out) const;
  std::vector<double> to_dense() const;

  bool operator==(const QasObservation&) const = default;
};

std::uint32_t observation_flat_index(int moment, int row, int col, int n_qubits);

/// Encodes the circuit structure (gate kinds, placements, moments; no
/// angles) plus the scalar cost feature.
QasObservation encode_observation(const CircuitProgram& circuit, int d_max,
                                  bool parameterized, double cost_feature);

struct DecodedGate {
  qsim::Gate gate;  // angle always 0; structure only
  int moment = 0;
};

/// Rebuilds gate kinds, placements and moments from the structure tensor,
/// sorted by (moment, first qubit). Angles are not represented.
std::vector<DecodedGate> decode_observation(const QasObservation& obs);

}  // namespace rlqas::env
