#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rlqas::agents {

/// Hyperparameters shared by all agents; unspecified fields keep the
/// benchmark defaults below.
struct AgentConfig {
  // Network: hidden_layers layers of hidden_width neurons each.
  int hidden_width = 1000;
  int hidden_layers = 3;

  double gamma = 0.88;
  double lr = 3e-4;
  int batch = 1000;
  int target_sync = 500;  // learner steps between target-network copies
  std::size_t replay_capacity = 20000;

  double eps_start = 1.0;
  double eps_min = 0.05;
  double eps_decay = 0.99995;  // multiplicative, per environment step

  // Prioritized replay.
  double per_alpha = 0.6;
  double per_beta0 = 0.4;
  std::uint64_t per_beta_steps = 100000;

  // PPO family.
  double ppo_clip = 0.2;
  int ppo_epochs = 4;
  double gae_lambda = 0.95;
  double entropy_coef = 0.01;
  double value_coef = 0.5;
  int rollout_steps = 1000;
  int minibatch = 250;
  double tppo_rollback = 0.3;  // rollback slope alpha

  int a3c_workers = 3;

  nlohmann::json to_json() const;
  static AgentConfig from_json(const nlohmann::json& j);  // partial override
  void apply_json(const nlohmann::json& j);
};

}  // namespace rlqas::agents
