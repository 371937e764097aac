#include "rlqas/problems/task.hpp"

#include <cstdlib>
#include <sstream>

#include "rlqas/problems/hamiltonian_io.hpp"
#include "rlqas/problems/mixed_state.hpp"
#include "rlqas/problems/targets.hpp"

#ifndef RLQAS_DATA_DIR
#define RLQAS_DATA_DIR "data"
#endif

namespace rlqas::problems {

const char* task_kind_name(TaskKind k) {
  switch (k) {
    case TaskKind::VQE: return "vqe";
    case TaskKind::VQSD: return "vqsd";
    case TaskKind::VQC: return "vqc";
    case TaskKind::STATE_PREP: return "state_prep";
  }
  return "?";
}

void TaskSpec::validate() const {
  if (d_max <= 0) throw std::invalid_argument("task d_max must be positive");
  if (zeta <= 0.0) throw std::invalid_argument("task zeta must be positive");
  if (n_qubits < 2 || n_qubits > 8)
    throw std::invalid_argument("task qubit count must be in [2,8]");
  if (optimizer_budget < 1)
    throw std::invalid_argument("optimizer budget must be at least 1");
  noise.validate();
  switch (kind) {
    case TaskKind::VQE:
      if (!hamiltonian) throw std::invalid_argument("VQE task needs a hamiltonian");
      if (hamiltonian->n_qubits != n_qubits)
        throw std::invalid_argument("hamiltonian qubit count mismatch");
      break;
    case TaskKind::VQSD:
      if (!vqsd_target) throw std::invalid_argument("VQSD task needs a target state");
      if (vqsd_target->n_qubits() != n_qubits)
        throw std::invalid_argument("VQSD target qubit count mismatch");
      break;
    case TaskKind::VQC:
      if (!dataset) throw std::invalid_argument("VQC task needs a dataset");
      break;
    case TaskKind::STATE_PREP:
      if (!prep_target) throw std::invalid_argument("state-prep task needs a target");
      if (prep_target->n_qubits() != n_qubits)
        throw std::invalid_argument("prep target qubit count mismatch");
      break;
  }
}

std::string default_data_dir() {
  if (const char* env = std::getenv("RLQAS_DATA_DIR")) return env;
  return RLQAS_DATA_DIR;
}

namespace {

TaskSpec vqe_task(const std::string& id, const std::string& file, int d_max,
                  int budget, int layers, const std::string& data_dir) {
  TaskSpec t;
  t.id = id;
  t.kind = TaskKind::VQE;
  t.d_max = d_max;
  t.zeta = 1.6e-3;  // chemical accuracy
  t.optimizer_budget = budget;
  t.hidden_layers = layers;
  t.hamiltonian = load_hamiltonian(data_dir + "/hamiltonians/" + file);
  t.n_qubits = t.hamiltonian->n_qubits;
  return t;
}

}  // namespace

TaskSpec make_task(const std::string& id, bool noisy, const std::string& data_dir) {
  const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
  TaskSpec t;
  if (id == "vqe-h2") {
    t = vqe_task(id, "h2_4q.json", 40, 100, 3, dir);
  } else if (id == "vqe-beh2") {
    t = vqe_task(id, "beh2_6q.json", 70, 200, 4, dir);
  } else if (id == "vqe-h2o") {
    t = vqe_task(id, "h2o_8q.json", 250, 500, 5, dir);
  } else if (id == "vqsd-2q") {
    t.id = id;
    t.kind = TaskKind::VQSD;
    t.n_qubits = 2;
    t.d_max = 40;
    t.zeta = 5e-2;
    t.optimizer_budget = 500;
    t.hidden_layers = 4;
    t.vqsd_target = random_mixed_state(2, 4, 7);
  } else if (id == "vqc-circle") {
    t.id = id;
    t.kind = TaskKind::VQC;
    t.n_qubits = 3;
    t.d_max = 25;
    t.zeta = 0.2;
    t.optimizer_budget = 1000;
    t.hidden_layers = 3;
    t.dataset = generate_vqc_dataset(42, 200, 100);
  } else if (id == "ghz-3q") {
    t.id = id;
    t.kind = TaskKind::STATE_PREP;
    t.n_qubits = 3;
    t.d_max = 40;
    t.zeta = 0.02;  // 1 - fidelity threshold; kept consistent with 0.98
    t.optimizer_budget = 1;
    t.hidden_layers = 3;
    t.prep_target = ghz_target(3);
    t.fidelity_threshold = 0.98;
    t.big_reward = 5.0;
  } else {
    std::ostringstream msg;
    msg << "unknown task id '" << id << "'; valid ids:";
    for (const auto& v : builtin_task_ids()) msg << " " << v;
    throw std::invalid_argument(msg.str());
  }
  if (noisy) {
    t.noise.enabled = true;
    t.noise.p1 = 0.001;
    t.noise.p2 = 0.0001;
  }
  t.validate();
  return t;
}

std::vector<std::string> builtin_task_ids() {
  return {"vqe-h2", "vqe-beh2", "vqe-h2o", "vqsd-2q", "vqc-circle", "ghz-3q"};
}

}  // namespace rlqas::problems
