#include "rlqas/env/environment.hpp"

#include <cmath>

#include "rlqas/errors.hpp"
#include "rlqas/opt/minimize.hpp"
#include "rlqas/problems/dataset.hpp"

namespace rlqas::env {

using problems::TaskKind;

double vqsd_cost_value(const qsim::DensityMatrix& rho,
                       const qsim::DensityMatrix& transformed) {
  return rho.purity() - transformed.dephased().purity();
}

QasEnv::QasEnv(problems::TaskSpec task)
    : task_(std::move(task)),
      action_space_(task_.n_qubits, task_.kind != TaskKind::STATE_PREP),
      circuit_(task_.n_qubits) {
  task_.validate();
  curriculum_ = task_.curriculum_enabled
                    ? CurriculumTracker::scheduled(task_.curriculum_zeta0, task_.zeta,
                                                   task_.curriculum_decay)
                    : CurriculumTracker::fixed(task_.zeta);

  switch (task_.kind) {
    case TaskKind::VQE:
      dense_h_ = qsim::dense_matrix(*task_.hamiltonian);
      e_min_ = task_.hamiltonian->ground_energy;
      break;
    case TaskKind::VQSD:
      target_purity_ = task_.vqsd_target->purity();
      e_min_ = 0.0;
      break;
    case TaskKind::VQC: {
      e_min_ = 0.0;
      const auto& ds = *task_.dataset;
      auto build = [this](const std::vector<problems::Sample>& samples,
                          std::vector<qsim::Statevector>& sv_out,
                          std::vector<qsim::DensityMatrix>& dm_out) {
        for (const auto& s : samples) {
          qsim::Statevector state(task_.n_qubits);
          const auto prefix = problems::encode_features(s.x);
          if (task_.noise.enabled) {
            qsim::DensityMatrix rho(task_.n_qubits);
            for (const auto& g : prefix) {
              rho.apply(g);
              if (task_.noise.p1 > 0.0) rho.depolarize({g.q0}, task_.noise.p1);
            }
            dm_out.push_back(std::move(rho));
          } else {
            for (const auto& g : prefix) state.apply(g);
            sv_out.push_back(std::move(state));
          }
        }
      };
      build(ds.train, encoded_train_, encoded_train_dm_);
      build(ds.test, encoded_test_, encoded_test_dm_);
      break;
    }
    case TaskKind::STATE_PREP:
      e_min_ = 0.0;  // cost is 1 - fidelity
      break;
  }
  reset();
}

std::size_t QasEnv::observation_size() const {
  return static_cast<std::size_t>(task_.d_max) * (task_.n_qubits + 3) *
             task_.n_qubits +
         1;
}

QasObservation QasEnv::reset(std::uint64_t /*seed*/) {
  circuit_ = CircuitProgram(task_.n_qubits);
  t_ = 0;
  done_ = false;
  c0_ = evaluate_cost(circuit_);
  prev_cost_ = c0_;
  return encode_observation(circuit_, task_.d_max, action_space_.parameterized(),
                            cost_feature(c0_));
}

bool QasEnv::gate_would_be_redundant(const qsim::Gate& g) const {
  const int m = circuit_.next_moment(g);
  if (m == 0) return false;
  const int prev_idx = circuit_.gate_at(m - 1, g.q0);
  if (prev_idx < 0) return false;
  const auto& prev = circuit_.gates()[static_cast<std::size_t>(prev_idx)];
  if (g.kind == qsim::GateKind::CX)
    return prev.kind == qsim::GateKind::CX && prev.q0 == g.q0 && prev.q1 == g.q1;
  return prev.kind == g.kind && prev.q0 == g.q0;
}

std::vector<std::uint8_t> QasEnv::legal_action_mask() const {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(action_space_.size()), 1);
  for (int a = 0; a < action_space_.size(); ++a)
    if (gate_would_be_redundant(action_space_.decode(a)))
      mask[static_cast<std::size_t>(a)] = 0;
  return mask;
}

bool QasEnv::is_action_legal(int action) const {
  return !gate_would_be_redundant(action_space_.decode(action));
}

double QasEnv::vqe_cost(const CircuitProgram& c) const {
  if (task_.noise.enabled) {
    const qsim::DensityMatrix rho =
        c.simulate_density(qsim::DensityMatrix(task_.n_qubits), task_.noise);
    return (rho.matrix().cwiseProduct(dense_h_.transpose())).sum().real();
  }
  const qsim::Statevector psi = c.simulate();
  const auto d = static_cast<Eigen::Index>(psi.dim());
  Eigen::Map<const Eigen::VectorXcd> v(psi.amps().data(), d);
  return (v.adjoint() * (dense_h_ * v))(0, 0).real();
}

double QasEnv::vqsd_cost(const CircuitProgram& c) const {
  const qsim::DensityMatrix transformed =
      c.simulate_density(*task_.vqsd_target, task_.noise);
  return target_purity_ - transformed.dephased().purity();
}

std::pair<double, double> QasEnv::vqc_cost_accuracy(const CircuitProgram& c,
                                                    bool test_split) const {
  const auto& samples = test_split ? task_.dataset->test : task_.dataset->train;
  double sq_err = 0.0;
  int correct = 0;
  const auto predict_sv = [&](const qsim::Statevector& encoded) {
    qsim::Statevector psi = encoded;
    c.apply_to(psi);
    // <Z on qubit 0>: qubit 0 is the most significant bit.
    const std::size_t half = psi.dim() / 2;
    double z = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i)
      z += (i < half ? 1.0 : -1.0) * std::norm(psi.amp(i));
    return (1.0 - z) / 2.0;
  };
  const auto predict_dm = [&](const qsim::DensityMatrix& encoded) {
    const qsim::DensityMatrix rho = c.simulate_density(encoded, task_.noise);
    const auto d = static_cast<Eigen::Index>(rho.dim());
    double z = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
      z += (i < d / 2 ? 1.0 : -1.0) * rho.matrix()(i, i).real();
    return (1.0 - z) / 2.0;
  };
  std::size_t n = 0;
  if (task_.noise.enabled) {
    const auto& enc = test_split ? encoded_test_dm_ : encoded_train_dm_;
    n = enc.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double y = predict_dm(enc[i]);
      const int a = samples[i].label;
      sq_err += (y - a) * (y - a);
      correct += ((y >= 0.5 ? 1 : 0) == a) ? 1 : 0;
    }
  } else {
    const auto& enc = test_split ? encoded_test_ : encoded_train_;
    n = enc.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double y = predict_sv(enc[i]);
      const int a = samples[i].label;
      sq_err += (y - a) * (y - a);
      correct += ((y >= 0.5 ? 1 : 0) == a) ? 1 : 0;
    }
  }
  return {sq_err / (2.0 * static_cast<double>(n)),
          static_cast<double>(correct) / static_cast<double>(n)};
}

double QasEnv::state_fidelity(const CircuitProgram& c) const {
  if (task_.noise.enabled) {
    const qsim::DensityMatrix rho =
        c.simulate_density(qsim::DensityMatrix(task_.n_qubits), task_.noise);
    return qsim::fidelity(rho, *task_.prep_target);
  }
  return qsim::fidelity(c.simulate(), *task_.prep_target);
}

double QasEnv::evaluate_cost(const CircuitProgram& c) const {
  switch (task_.kind) {
    case TaskKind::VQE: return vqe_cost(c);
    case TaskKind::VQSD: return vqsd_cost(c);
    case TaskKind::VQC: return vqc_cost_accuracy(c, false).first;
    case TaskKind::STATE_PREP: return 1.0 - state_fidelity(c);
  }
  throw std::logic_error("unreachable");
}

double QasEnv::success_metric_of(const CircuitProgram& c, double cost) const {
  // The classifier's convergence trigger is the training error; all other
  // tasks compare the cost itself against zeta.
  if (task_.kind == TaskKind::VQC) return 1.0 - vqc_cost_accuracy(c, false).second;
  return cost;
}

double QasEnv::error_metric(const CircuitProgram& c) const {
  switch (task_.kind) {
    case TaskKind::VQE: return std::abs(evaluate_cost(c) - e_min_);
    case TaskKind::VQSD: return evaluate_cost(c);
    case TaskKind::VQC: return 1.0 - vqc_cost_accuracy(c, true).second;
    case TaskKind::STATE_PREP: return 1.0 - state_fidelity(c);
  }
  throw std::logic_error("unreachable");
}

double QasEnv::vqc_accuracy(const CircuitProgram& c, bool test_split) const {
  if (task_.kind != TaskKind::VQC)
    throw std::logic_error("vqc_accuracy only applies to VQC tasks");
  return vqc_cost_accuracy(c, test_split).second;
}

double QasEnv::cost_feature(double cost) const {
  const double scale = std::max(std::abs(c0_ - e_min_), 1e-12);
  const double v = (cost - e_min_) / scale;
  return std::min(1.0, std::max(0.0, v));
}

StepOutcome QasEnv::step(int action) {
  if (done_)
    throw ContractViolation("step called on a finished episode; reset first");
  const qsim::Gate g = action_space_.decode(action);
  if (gate_would_be_redundant(g))
    throw ContractViolation("masked action passed to step");

  const std::vector<double> warm = circuit_.params();  // previous optimum
  circuit_.append(g);

  int evals = 0;
  double cost = 0.0;
  if (action_space_.parameterized()) {
    if (circuit_.param_count() > 0) {
      std::vector<double> init = warm;
      if (qsim::is_rotation(g.kind)) init.push_back(0.0);
      const auto result = opt::minimize(
          [this](const std::vector<double>& p) {
            circuit_.set_params(p);
            return evaluate_cost(circuit_);
          },
          init, task_.optimizer_budget);
      circuit_.set_params(result.best_params);
      cost = result.best_cost;
      evals = result.evals_used;
    } else {
      cost = evaluate_cost(circuit_);
    }
  } else {
    cost = evaluate_cost(circuit_);  // 1 - fidelity
  }

  ++t_;
  StepOutcome out;
  out.info.cost = cost;
  out.info.depth = circuit_.depth();
  out.info.gate_count = circuit_.gate_count();
  out.info.optimizer_evals = evals;

  if (task_.kind == TaskKind::STATE_PREP) {
    const double f = 1.0 - cost;
    const auto [reward, success] =
        state_prep_reward(f, task_.fidelity_threshold, task_.big_reward);
    out.reward = reward;
    out.info.success_metric = 1.0 - f;
    out.done = success || t_ >= task_.d_max;
  } else {
    const double metric = success_metric_of(circuit_, cost);
    out.info.success_metric = metric;
    const bool success = metric <= curriculum_.zeta;
    out.reward = threshold_reward_with_success(prev_cost_, cost, e_min_, success, t_,
                                               task_.d_max);
    out.done = success || t_ >= task_.d_max;
  }
  prev_cost_ = cost;
  done_ = out.done;
  out.observation = encode_observation(circuit_, task_.d_max,
                                       action_space_.parameterized(),
                                       cost_feature(cost));
  return out;
}

}  // namespace rlqas::env
