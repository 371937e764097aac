#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace rlqas::agents {

/// Fully connected ReLU network with a linear output layer. Heads that need
/// special aggregation (dueling, policy+value) interpret slices of the
/// output vector.
class MlpNetwork {
 public:
  MlpNetwork() = default;
  MlpNetwork(std::vector<int> layer_sizes, std::uint64_t init_seed);

  int input_size() const { return layer_sizes_.front(); }
  int output_size() const { return layer_sizes_.back(); }
  const std::vector<int>& layer_sizes() const { return layer_sizes_; }
  std::size_t layer_count() const { return weights_.size(); }
  std::size_t param_count() const;

  std::vector<Eigen::MatrixXd>& weights() { return weights_; }
  const std::vector<Eigen::MatrixXd>& weights() const { return weights_; }
  std::vector<Eigen::VectorXd>& biases() { return biases_; }
  const std::vector<Eigen::VectorXd>& biases() const { return biases_; }

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;

  /// Activations per layer for a batch (columns are samples); acts[0] is the
  /// input, acts.back() the linear output.
  struct Trace {
    std::vector<Eigen::MatrixXd> acts;
  };
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& x, Trace* trace = nullptr) const;

  struct Gradients {
    std::vector<Eigen::MatrixXd> w;
    std::vector<Eigen::VectorXd> b;

    void accumulate(const Gradients& other);
    void scale(double s);
  };
  Gradients zero_gradients() const;

  /// Backpropagates dL/d(output) for the batch captured in `trace`.
  Gradients backward(const Trace& trace, const Eigen::MatrixXd& d_output) const;

  void copy_from(const MlpNetwork& other);
  bool params_equal(const MlpNetwork& other, double tol = 0.0) const;

 private:
  std::vector<int> layer_sizes_;
  std::vector<Eigen::MatrixXd> weights_;  // [out x in]
  std::vector<Eigen::VectorXd> biases_;
};

struct AdamConfig {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Adaptive-moment optimizer state for one network.
class AdamOptimizer {
 public:
  AdamOptimizer() = default;
  AdamOptimizer(const MlpNetwork& net, AdamConfig cfg);
  void step(MlpNetwork& net, const MlpNetwork::Gradients& g);
  const AdamConfig& config() const { return cfg_; }

 private:
  AdamConfig cfg_;
  std::vector<Eigen::MatrixXd> mw_, vw_;
  std::vector<Eigen::VectorXd> mb_, vb_;
  long t_ = 0;
};

/// A differentiable scalar head on top of the raw network output.
struct LossHead {
  std::function<double(const Eigen::MatrixXd& y)> value;
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd& y)> grad;
};

/// Max absolute gradient discrepancy between backpropagation and central
/// finite differences (h = 1e-5), scaled by max(1, largest gradient
/// magnitude). Intended for small nets.
double backward_check(MlpNetwork& net, const Eigen::MatrixXd& x, const LossHead& head);

}  // namespace rlqas::agents
