#include "rlqas/env/circuit.hpp"

#include <algorithm>

namespace rlqas::env {

CircuitProgram::CircuitProgram(int n_qubits)
    : n_qubits_(n_qubits), frontier_(static_cast<std::size_t>(n_qubits), -1) {
  if (n_qubits < 1) throw std::invalid_argument("circuit needs at least 1 qubit");
}

int CircuitProgram::depth() const {
  return moments_.empty() ? 0 : 1 + *std::max_element(moments_.begin(), moments_.end());
}

int CircuitProgram::next_moment(const qsim::Gate& g) const {
  int f = frontier_[static_cast<std::size_t>(g.q0)];
  if (g.kind == qsim::GateKind::CX)
    f = std::max(f, frontier_[static_cast<std::size_t>(g.q1)]);
  return f + 1;
}

int CircuitProgram::gate_at(int moment, int qubit) const {
  if (moment < 0 || moment >= static_cast<int>(grid_.size())) return -1;
  return grid_[static_cast<std::size_t>(moment)][static_cast<std::size_t>(qubit)];
}

void CircuitProgram::append(const qsim::Gate& g) {
  qsim::validate_gate(g, n_qubits_);
  const int m = next_moment(g);
  const int idx = gate_count();
  gates_.push_back(g);
  moments_.push_back(m);
  if (qsim::is_rotation(g.kind)) param_gate_index_.push_back(idx);
  if (m >= static_cast<int>(grid_.size()))
    grid_.resize(static_cast<std::size_t>(m) + 1,
                 std::vector<int>(static_cast<std::size_t>(n_qubits_), -1));
  auto& row = grid_[static_cast<std::size_t>(m)];
  row[static_cast<std::size_t>(g.q0)] = idx;
  frontier_[static_cast<std::size_t>(g.q0)] = m;
  if (g.kind == qsim::GateKind::CX) {
    row[static_cast<std::size_t>(g.q1)] = idx;
    frontier_[static_cast<std::size_t>(g.q1)] = m;
  }
}

std::vector<double> CircuitProgram::params() const {
  std::vector<double> p;
  p.reserve(param_gate_index_.size());
  for (int idx : param_gate_index_)
    p.push_back(gates_[static_cast<std::size_t>(idx)].angle);
  return p;
}

void CircuitProgram::set_params(const std::vector<double>& p) {
  if (p.size() != param_gate_index_.size())
    throw std::invalid_argument("parameter vector length mismatch");
  for (std::size_t k = 0; k < p.size(); ++k)
    gates_[static_cast<std::size_t>(param_gate_index_[k])].angle = p[k];
}

void CircuitProgram::apply_to(qsim::Statevector& state) const {
  for (const auto& g : gates_) state.apply(g);
}

qsim::Statevector CircuitProgram::simulate() const {
  qsim::Statevector s(n_qubits_);
  apply_to(s);
  return s;
}

qsim::DensityMatrix CircuitProgram::simulate_density(
    const qsim::DensityMatrix& initial, const qsim::NoiseConfig& noise) const {
  qsim::DensityMatrix rho = initial;
  for (const auto& g : gates_) {
    rho.apply(g);
    if (noise.enabled) {
      if (g.kind == qsim::GateKind::CX) {
        if (noise.p2 > 0.0) rho.depolarize({g.q0, g.q1}, noise.p2);
      } else if (noise.p1 > 0.0) {
        rho.depolarize({g.q0}, noise.p1);
      }
    }
  }
  return rho;
}

}  // namespace rlqas::env
