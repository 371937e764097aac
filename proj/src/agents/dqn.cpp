#include "rlqas/agents/dqn.hpp"

#include <cassert>

namespace rlqas::agents {

Eigen::VectorXd q_values_from_output(const Eigen::VectorXd& y, bool dueling) {
  if (!dueling) return y;
  return dueling_aggregate(y(0), y.tail(y.size() - 1));
}

double dqn_target_value(double reward, bool done, double gamma,
                        const Eigen::VectorXd& q_target_s2,
                        const std::vector<std::uint8_t>& mask2,
                        const Eigen::VectorXd* q_online_s2) {
  if (done) return reward;
  const int a_star = q_online_s2 ? argmax_masked(*q_online_s2, mask2)
                                 : argmax_masked(q_target_s2, mask2);
  assert(a_star >= 0);
  return reward + gamma * q_target_s2(a_star);
}

namespace {
std::vector<int> network_layout(const AgentConfig& cfg, std::size_t obs_dim,
                                int out_dim) {
  std::vector<int> sizes;
  sizes.push_back(static_cast<int>(obs_dim));
  for (int l = 0; l < cfg.hidden_layers; ++l) sizes.push_back(cfg.hidden_width);
  sizes.push_back(out_dim);
  return sizes;
}
}  // namespace

DqnAgent::DqnAgent(std::string id, DqnOptions options, AgentConfig cfg,
                   std::size_t obs_dim, int n_actions, std::uint64_t seed)
    : id_(std::move(id)),
      options_(options),
      cfg_(cfg),
      n_actions_(n_actions),
      online_(network_layout(cfg, obs_dim, options.dueling ? n_actions + 1 : n_actions),
              seed),
      adam_(online_, AdamConfig{cfg.lr}),
      buffer_(cfg.replay_capacity, options.replay_mode, cfg.per_alpha, cfg.per_beta0,
              cfg.per_beta_steps),
      rng_(seed ^ 0xd9f1a2b3c4d5e6f7ULL),
      epsilon_(cfg.eps_start) {
  target_.copy_from(online_);
}

Eigen::VectorXd DqnAgent::q_values(const env::QasObservation& obs) const {
  obs.to_dense(const_cast<DqnAgent*>(this)->dense_scratch_);
  const Eigen::Map<const Eigen::VectorXd> x(dense_scratch_.data(),
                                            static_cast<Eigen::Index>(dense_scratch_.size()));
  return q_values_from_output(online_.forward(x), options_.dueling);
}

int DqnAgent::select_action(const env::QasObservation& obs,
                            const std::vector<std::uint8_t>& mask) {
  int n_legal = 0;
  for (auto m : mask) n_legal += m ? 1 : 0;
  assert(n_legal > 0 && "legal-action mask must not be empty");
  if (rng_.uniform() < epsilon_) {
    auto pick = rng_.uniform_index(static_cast<std::size_t>(n_legal));
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (!mask[i]) continue;
      if (pick == 0) return static_cast<int>(i);
      --pick;
    }
  }
  return argmax_masked(q_values(obs), mask);
}

void DqnAgent::observe(const Transition& t) {
  buffer_.push(t);
  epsilon_ = std::max(cfg_.eps_min, epsilon_ * cfg_.eps_decay);
  if (buffer_.size() >= static_cast<std::size_t>(cfg_.batch)) learn_step();
}

void DqnAgent::learn_step() {
  const auto batch = buffer_.sample(static_cast<std::size_t>(cfg_.batch), rng_);
  const auto b = static_cast<Eigen::Index>(batch.indices.size());
  const auto in_dim = static_cast<Eigen::Index>(online_.input_size());
  x_.resize(in_dim, b);
  x2_.resize(in_dim, b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const Transition& t = buffer_.at(batch.indices[static_cast<std::size_t>(i)]);
    t.s.to_dense(dense_scratch_);
    x_.col(i) = Eigen::Map<const Eigen::VectorXd>(dense_scratch_.data(), in_dim);
    t.s2.to_dense(dense_scratch_);
    x2_.col(i) = Eigen::Map<const Eigen::VectorXd>(dense_scratch_.data(), in_dim);
  }

  const Eigen::MatrixXd yt2 = target_.forward_batch(x2_);
  Eigen::MatrixXd yo2;
  if (options_.double_q) yo2 = online_.forward_batch(x2_);

  Eigen::VectorXd targets(b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const Transition& t = buffer_.at(batch.indices[static_cast<std::size_t>(i)]);
    const Eigen::VectorXd qt = q_values_from_output(yt2.col(i), options_.dueling);
    if (options_.double_q) {
      const Eigen::VectorXd qo = q_values_from_output(yo2.col(i), options_.dueling);
      targets(i) = dqn_target_value(t.reward, t.done, cfg_.gamma, qt, t.mask2, &qo);
    } else {
      targets(i) = dqn_target_value(t.reward, t.done, cfg_.gamma, qt, t.mask2);
    }
  }

  MlpNetwork::Trace trace;
  const Eigen::MatrixXd y = online_.forward_batch(x_, &trace);
  dy_.setZero(y.rows(), y.cols());
  std::vector<double> td(static_cast<std::size_t>(b));
  const double inv_b = 1.0 / static_cast<double>(b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const Transition& t = buffer_.at(batch.indices[static_cast<std::size_t>(i)]);
    const Eigen::VectorXd q = q_values_from_output(y.col(i), options_.dueling);
    const double delta = q(t.action) - targets(i);
    td[static_cast<std::size_t>(i)] = delta;
    const double g = 2.0 * batch.weights[static_cast<std::size_t>(i)] * delta * inv_b;
    if (options_.dueling) {
      // Chain rule through Q = V + A - mean(A).
      dy_(0, i) += g;
      const double shift = g / static_cast<double>(n_actions_);
      for (int j = 0; j < n_actions_; ++j)
        dy_(1 + j, i) += (j == t.action ? g : 0.0) - shift;
    } else {
      dy_(t.action, i) = g;
    }
  }
  const auto grads = online_.backward(trace, dy_);
  adam_.step(online_, grads);
  buffer_.update_priorities(batch.indices, td);
  ++learner_steps_;
  if (learner_steps_ % cfg_.target_sync == 0) target_.copy_from(online_);
}

nlohmann::json DqnAgent::config_json() const {
  auto j = cfg_.to_json();
  j["algorithm"] = id_;
  j["double_q"] = options_.double_q;
  j["dueling"] = options_.dueling;
  j["replay_mode"] = options_.replay_mode == ReplayMode::Uniform ? "uniform"
                     : options_.replay_mode == ReplayMode::Proportional
                         ? "proportional"
                         : "rank";
  return j;
}

}  // namespace rlqas::agents
