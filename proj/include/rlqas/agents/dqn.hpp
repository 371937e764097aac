#pragma once

#include "rlqas/agents/agent.hpp"
#include "rlqas/agents/mlp.hpp"
#include "rlqas/agents/policy_utils.hpp"

namespace rlqas::agents {

/// Q-vector from a raw network output; dueling nets emit [V, A_0..A_{n-1}].
Eigen::VectorXd q_values_from_output(const Eigen::VectorXd& y, bool dueling);

/// One-transition bootstrap target. DQN maxes the target net over s2's
/// legal actions; DDQN (pass q_online_s2) takes the online argmax and the
/// target net's value at it.
double dqn_target_value(double reward, bool done, double gamma,
                        const Eigen::VectorXd& q_target_s2,
                        const std::vector<std::uint8_t>& mask2,
                        const Eigen::VectorXd* q_online_s2 = nullptr);

struct DqnOptions {
  bool double_q = false;
  bool dueling = false;
  ReplayMode replay_mode = ReplayMode::Uniform;
};

class DqnAgent : public Agent {
 public:
  DqnAgent(std::string id, DqnOptions options, AgentConfig cfg, std::size_t obs_dim,
           int n_actions, std::uint64_t seed);

  const std::string& id() const override { return id_; }
  int select_action(const env::QasObservation& obs,
                    const std::vector<std::uint8_t>& mask) override;
  void observe(const Transition& t) override;
  nlohmann::json config_json() const override;

  double epsilon() const { return epsilon_; }
  long learner_steps() const { return learner_steps_; }
  const MlpNetwork& online_net() const { return online_; }
  const MlpNetwork& target_net() const { return target_; }
  Eigen::VectorXd q_values(const env::QasObservation& obs) const;

 private:
  void learn_step();

  std::string id_;
  DqnOptions options_;
  AgentConfig cfg_;
  int n_actions_;
  MlpNetwork online_;
  MlpNetwork target_;
  AdamOptimizer adam_;
  ReplayBuffer buffer_;
  Rng rng_;
  double epsilon_;
  long learner_steps_ = 0;

  // scratch for learn_step, reused between calls
  Eigen::MatrixXd x_, x2_, dy_;
  std::vector<double> dense_scratch_;
};

}  // namespace rlqas::agents
