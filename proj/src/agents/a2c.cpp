#include "rlqas/agents/a2c.hpp"

#include <cassert>
#include <cmath>

namespace rlqas::agents {

namespace {
std::vector<int> layout(const AgentConfig& cfg, std::size_t obs_dim, int n_actions) {
  std::vector<int> sizes{static_cast<int>(obs_dim)};
  for (int l = 0; l < cfg.hidden_layers; ++l) sizes.push_back(cfg.hidden_width);
  sizes.push_back(n_actions + 1);  // logits + state value
  return sizes;
}
}  // namespace

A2cAgent::A2cAgent(std::string id, AgentConfig cfg, std::size_t obs_dim, int n_actions,
                   std::uint64_t seed, GradientSink sink)
    : id_(std::move(id)),
      cfg_(cfg),
      n_actions_(n_actions),
      net_(layout(cfg, obs_dim, n_actions), seed),
      adam_(net_, AdamConfig{cfg.lr}),
      rng_(seed ^ 0xa2ca2ca2c0ffee11ULL),
      sink_(std::move(sink)) {}

int A2cAgent::select_action(const env::QasObservation& obs,
                            const std::vector<std::uint8_t>& mask) {
  obs.to_dense(dense_scratch_);
  const Eigen::Map<const Eigen::VectorXd> x(
      dense_scratch_.data(), static_cast<Eigen::Index>(dense_scratch_.size()));
  const Eigen::VectorXd y = net_.forward(x);
  const Eigen::VectorXd probs = masked_softmax(y.head(n_actions_), mask);
  pending_mask_ = mask;
  const int a = sample_categorical(probs, rng_);
  assert(a >= 0);
  return a;
}

void A2cAgent::observe(const Transition& t) {
  Step step;
  t.s.to_dense(dense_scratch_);
  step.x = Eigen::Map<const Eigen::VectorXd>(
      dense_scratch_.data(), static_cast<Eigen::Index>(dense_scratch_.size()));
  step.mask = pending_mask_;
  step.action = t.action;
  step.reward = t.reward;
  episode_.push_back(std::move(step));
}

AcLossParts A2cAgent::loss_parts(const Eigen::MatrixXd& y,
                                 const std::vector<std::vector<std::uint8_t>>& masks,
                                 const std::vector<int>& actions,
                                 const Eigen::VectorXd& returns) {
  const auto n = static_cast<Eigen::Index>(actions.size());
  const int n_actions = static_cast<int>(y.rows()) - 1;
  AcLossParts parts;
  for (Eigen::Index t = 0; t < n; ++t) {
    const Eigen::VectorXd probs =
        masked_softmax(y.col(t).head(n_actions), masks[static_cast<std::size_t>(t)]);
    const double v = y(n_actions, t);
    const double adv = returns(t) - v;
    parts.policy -= std::log(std::max(probs(actions[static_cast<std::size_t>(t)]),
                                      1e-300)) *
                    adv;
    parts.value += (v - returns(t)) * (v - returns(t));
    parts.entropy += entropy_of(probs);
  }
  const double inv = 1.0 / static_cast<double>(n);
  parts.policy *= inv;
  parts.value *= inv;
  parts.entropy *= inv;
  return parts;
}

void A2cAgent::episode_end() {
  if (episode_.empty()) return;
  const auto n = static_cast<Eigen::Index>(episode_.size());
  Eigen::MatrixXd x(net_.input_size(), n);
  std::vector<std::vector<std::uint8_t>> masks;
  std::vector<int> actions;
  for (Eigen::Index t = 0; t < n; ++t) {
    const auto& s = episode_[static_cast<std::size_t>(t)];
    x.col(t) = s.x;
    masks.push_back(s.mask);
    actions.push_back(s.action);
  }
  // Full discounted returns; episodes always reach a terminal state.
  Eigen::VectorXd returns(n);
  double g = 0.0;
  for (Eigen::Index t = n - 1; t >= 0; --t) {
    g = episode_[static_cast<std::size_t>(t)].reward + cfg_.gamma * g;
    returns(t) = g;
  }

  MlpNetwork::Trace trace;
  const Eigen::MatrixXd y = net_.forward_batch(x, &trace);
  last_loss_ = loss_parts(y, masks, actions, returns);

  Eigen::MatrixXd dy = Eigen::MatrixXd::Zero(y.rows(), y.cols());
  const double inv = 1.0 / static_cast<double>(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    const Eigen::VectorXd probs = masked_softmax(y.col(t).head(n_actions_),
                                                 masks[static_cast<std::size_t>(t)]);
    const double v = y(n_actions_, t);
    const double adv = returns(t) - v;
    const double h = entropy_of(probs);
    for (int j = 0; j < n_actions_; ++j) {
      const double pj = probs(j);
      if (pj <= 0.0) continue;  // illegal actions receive no gradient
      const double onehot = (j == actions[static_cast<std::size_t>(t)]) ? 1.0 : 0.0;
      double d = -adv * (onehot - pj);                      // policy term
      d += cfg_.entropy_coef * pj * (std::log(pj) + h);     // -c_H * entropy
      dy(j, t) = d * inv;
    }
    dy(n_actions_, t) = cfg_.value_coef * 2.0 * (v - returns(t)) * inv;
  }
  const auto grads = net_.backward(trace, dy);
  if (sink_) {
    sink_(grads, net_);
  } else {
    adam_.step(net_, grads);
  }
  episode_.clear();
}

nlohmann::json A2cAgent::config_json() const {
  auto j = cfg_.to_json();
  j["algorithm"] = id_;
  return j;
}

}  // namespace rlqas::agents
