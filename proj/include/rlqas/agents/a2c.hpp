#pragma once

#include <functional>

#include "rlqas/agents/agent.hpp"
#include "rlqas/agents/mlp.hpp"
#include "rlqas/agents/policy_utils.hpp"

namespace rlqas::agents {

struct AcLossParts {
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double total(double value_coef, double entropy_coef) const {
    return policy + value_coef * value - entropy_coef * entropy;
  }
};

/// Advantage actor-critic on a shared body; the output layer holds the
/// action logits followed by one state-value unit. Updates once per episode
/// from full discounted returns. When a gradient sink is supplied (the A3C
/// worker path) the episode gradient goes there instead of the local
/// optimizer, and the sink is expected to refresh the local network.
class A2cAgent : public Agent {
 public:
  using GradientSink =
      std::function<void(const MlpNetwork::Gradients&, MlpNetwork& local)>;

  A2cAgent(std::string id, AgentConfig cfg, std::size_t obs_dim, int n_actions,
           std::uint64_t seed, GradientSink sink = nullptr);

  const std::string& id() const override { return id_; }
  int select_action(const env::QasObservation& obs,
                    const std::vector<std::uint8_t>& mask) override;
  void observe(const Transition& t) override;
  void episode_end() override;
  nlohmann::json config_json() const override;

  const MlpNetwork& net() const { return net_; }
  MlpNetwork& net() { return net_; }
  const AcLossParts& last_loss() const { return last_loss_; }

  /// Loss parts for a recorded trajectory given raw network outputs
  /// (columns per step) and discounted returns; shared with tests.
  static AcLossParts loss_parts(const Eigen::MatrixXd& y,
                                const std::vector<std::vector<std::uint8_t>>& masks,
                                const std::vector<int>& actions,
                                const Eigen::VectorXd& returns);

 private:
  struct Step {
    Eigen::VectorXd x;
    std::vector<std::uint8_t> mask;
    int action = 0;
    double reward = 0.0;
  };

  std::string id_;
  AgentConfig cfg_;
  int n_actions_;
  MlpNetwork net_;
  AdamOptimizer adam_;
  Rng rng_;
  GradientSink sink_;
  std::vector<Step> episode_;
  std::vector<std::uint8_t> pending_mask_;
  std::vector<double> dense_scratch_;
  AcLossParts last_loss_;
};

}  // namespace rlqas::agents
