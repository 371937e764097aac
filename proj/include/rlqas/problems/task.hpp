#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlqas/problems/dataset.hpp"
#include "rlqas/qsim/density_matrix.hpp"
#include "rlqas/qsim/pauli.hpp"
#include "rlqas/qsim/statevector.hpp"

namespace rlqas::problems {

enum class TaskKind { VQE, VQSD, VQC, STATE_PREP };

const char* task_kind_name(TaskKind k);

/// Everything an environment needs to run one benchmark task.
struct TaskSpec {
  std::string id;
  TaskKind kind = TaskKind::VQE;
  int n_qubits = 0;
  int d_max = 0;
  double zeta = 0.0;
  int optimizer_budget = 500;
  qsim::NoiseConfig noise;
  int hidden_layers = 3;  // network depth used for this task by default

  // Payload, one of these depending on kind.
  std::optional<qsim::PauliHamiltonian> hamiltonian;       // VQE
  std::optional<qsim::DensityMatrix> vqsd_target;          // VQSD
  std::optional<ClassificationDataset> dataset;            // VQC
  std::optional<qsim::Statevector> prep_target;            // STATE_PREP

  // State-preparation reward parameters.
  double fidelity_threshold = 0.98;
  double big_reward = 5.0;

  // Optional success-threshold curriculum; disabled by default, in which
  // case zeta stays fixed for the whole run.
  bool curriculum_enabled = false;
  double curriculum_zeta0 = 0.0;
  double curriculum_decay = 0.5;

  void validate() const;
};

/// Resolves the directory holding bundled Hamiltonian files. Order:
/// explicit argument, RLQAS_DATA_DIR environment variable, compiled-in
/// default.
std::string default_data_dir();

/// Builds one of the built-in benchmark tasks by id; `noisy` switches on
/// the 0.1% / 0.01% depolarizing preset.
TaskSpec make_task(const std::string& id, bool noisy = false,
                   const std::string& data_dir = "");

std::vector<std::string> builtin_task_ids();

}  // namespace rlqas::problems
