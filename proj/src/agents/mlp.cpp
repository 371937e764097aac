#include "rlqas/agents/mlp.hpp"

#include <cmath>
#include <stdexcept>

#include "rlqas/rng.hpp"

namespace rlqas::agents {

MlpNetwork::MlpNetwork(std::vector<int> layer_sizes, std::uint64_t init_seed)
    : layer_sizes_(std::move(layer_sizes)) {
  if (layer_sizes_.size() < 2)
    throw std::invalid_argument("network needs at least input and output layers");
  Rng rng(init_seed);
  for (std::size_t l = 0; l + 1 < layer_sizes_.size(); ++l) {
    const int in = layer_sizes_[l];
    const int out = layer_sizes_[l + 1];
    if (in < 1 || out < 1) throw std::invalid_argument("layer sizes must be positive");
    Eigen::MatrixXd w(out, in);
    const double bound = std::sqrt(6.0 / in);  // He-style uniform fan-in init
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = rng.uniform(-bound, bound);
    weights_.push_back(std::move(w));
    biases_.push_back(Eigen::VectorXd::Zero(out));
  }
}

std::size_t MlpNetwork::param_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l)
    n += static_cast<std::size_t>(weights_[l].size()) +
         static_cast<std::size_t>(biases_[l].size());
  return n;
}

Eigen::VectorXd MlpNetwork::forward(const Eigen::VectorXd& x) const {
  if (x.size() != input_size())
    throw std::invalid_argument("network input dimension mismatch");
  Eigen::VectorXd a = x;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    a = (weights_[l] * a + biases_[l]).eval();
    if (l + 1 < weights_.size()) a = a.cwiseMax(0.0);
  }
  return a;
}

Eigen::MatrixXd MlpNetwork::forward_batch(const Eigen::MatrixXd& x, Trace* trace) const {
  if (x.rows() != input_size())
    throw std::invalid_argument("network input dimension mismatch");
  if (trace) {
    trace->acts.clear();
    trace->acts.push_back(x);
  }
  Eigen::MatrixXd a = x;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    a = ((weights_[l] * a).colwise() + biases_[l]).eval();
    if (l + 1 < weights_.size()) a = a.cwiseMax(0.0);
    if (trace) trace->acts.push_back(a);
  }
  return a;
}

void MlpNetwork::Gradients::accumulate(const Gradients& other) {
  for (std::size_t l = 0; l < w.size(); ++l) {
    w[l] += other.w[l];
    b[l] += other.b[l];
  }
}

void MlpNetwork::Gradients::scale(double s) {
  for (std::size_t l = 0; l < w.size(); ++l) {
    w[l] *= s;
    b[l] *= s;
  }
}

MlpNetwork::Gradients MlpNetwork::zero_gradients() const {
  Gradients g;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    g.w.push_back(Eigen::MatrixXd::Zero(weights_[l].rows(), weights_[l].cols()));
    g.b.push_back(Eigen::VectorXd::Zero(biases_[l].size()));
  }
  return g;
}

MlpNetwork::Gradients MlpNetwork::backward(const Trace& trace,
                                           const Eigen::MatrixXd& d_output) const {
  const std::size_t n_layers = weights_.size();
  if (trace.acts.size() != n_layers + 1)
    throw std::invalid_argument("trace does not match network");
  Gradients g = zero_gradients();
  Eigen::MatrixXd delta = d_output;
  for (std::size_t l = n_layers; l-- > 0;) {
    g.w[l] = delta * trace.acts[l].transpose();
    g.b[l] = delta.rowwise().sum();
    if (l > 0) {
      delta = (weights_[l].transpose() * delta).eval();
      // ReLU mask from the stored (post-activation) values.
      delta = delta.cwiseProduct(
          (trace.acts[l].array() > 0.0).cast<double>().matrix());
    }
  }
  return g;
}

void MlpNetwork::copy_from(const MlpNetwork& other) {
  layer_sizes_ = other.layer_sizes_;
  weights_ = other.weights_;
  biases_ = other.biases_;
}

bool MlpNetwork::params_equal(const MlpNetwork& other, double tol) const {
  if (layer_sizes_ != other.layer_sizes_) return false;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    if ((weights_[l] - other.weights_[l]).cwiseAbs().maxCoeff() > tol) return false;
    if ((biases_[l] - other.biases_[l]).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

AdamOptimizer::AdamOptimizer(const MlpNetwork& net, AdamConfig cfg) : cfg_(cfg) {
  for (std::size_t l = 0; l < net.weights().size(); ++l) {
    mw_.push_back(Eigen::MatrixXd::Zero(net.weights()[l].rows(), net.weights()[l].cols()));
    vw_.push_back(Eigen::MatrixXd::Zero(net.weights()[l].rows(), net.weights()[l].cols()));
    mb_.push_back(Eigen::VectorXd::Zero(net.biases()[l].size()));
    vb_.push_back(Eigen::VectorXd::Zero(net.biases()[l].size()));
  }
}

void AdamOptimizer::step(MlpNetwork& net, const MlpNetwork::Gradients& g) {
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (std::size_t l = 0; l < net.weights().size(); ++l) {
    mw_[l] = cfg_.beta1 * mw_[l] + (1.0 - cfg_.beta1) * g.w[l];
    vw_[l] = cfg_.beta2 * vw_[l] + (1.0 - cfg_.beta2) * g.w[l].cwiseProduct(g.w[l]);
    net.weights()[l] -=
        (cfg_.lr * (mw_[l] / bc1).array() / ((vw_[l] / bc2).array().sqrt() + cfg_.eps))
            .matrix();
    mb_[l] = cfg_.beta1 * mb_[l] + (1.0 - cfg_.beta1) * g.b[l];
    vb_[l] = cfg_.beta2 * vb_[l] + (1.0 - cfg_.beta2) * g.b[l].cwiseProduct(g.b[l]);
    net.biases()[l] -=
        (cfg_.lr * (mb_[l] / bc1).array() / ((vb_[l] / bc2).array().sqrt() + cfg_.eps))
            .matrix();
  }
}

double backward_check(MlpNetwork& net, const Eigen::MatrixXd& x, const LossHead& head) {
  MlpNetwork::Trace trace;
  const Eigen::MatrixXd y = net.forward_batch(x, &trace);
  const MlpNetwork::Gradients analytic = net.backward(trace, head.grad(y));

  constexpr double h = 1e-5;
  double max_diff = 0.0;
  double max_mag = 0.0;
  auto probe = [&](double& param, double analytic_g) {
    const double saved = param;
    param = saved + h;
    const double lp = head.value(net.forward_batch(x));
    param = saved - h;
    const double lm = head.value(net.forward_batch(x));
    param = saved;
    const double fd = (lp - lm) / (2.0 * h);
    max_diff = std::max(max_diff, std::abs(analytic_g - fd));
    max_mag = std::max({max_mag, std::abs(analytic_g), std::abs(fd)});
  };
  for (std::size_t l = 0; l < net.weights().size(); ++l) {
    auto& w = net.weights()[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) probe(w(i, j), analytic.w[l](i, j));
    auto& b = net.biases()[l];
    for (Eigen::Index i = 0; i < b.size(); ++i) probe(b(i), analytic.b[l](i));
  }
  return max_diff / std::max(1.0, max_mag);
}

}  // namespace rlqas::agents
