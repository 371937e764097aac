#include "rlqas/agents/replay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rlqas/errors.hpp"

namespace rlqas::agents {

ReplayBuffer::ReplayBuffer(std::size_t capacity, ReplayMode mode, double alpha,
                           double beta0, std::uint64_t beta_anneal_steps)
    : capacity_(capacity),
      mode_(mode),
      alpha_(alpha),
      beta0_(beta0),
      beta_anneal_steps_(std::max<std::uint64_t>(1, beta_anneal_steps)) {
  if (capacity < 1) throw std::invalid_argument("replay capacity must be positive");
}

double ReplayBuffer::beta() const {
  const double frac =
      std::min(1.0, static_cast<double>(sample_calls_) /
                        static_cast<double>(beta_anneal_steps_));
  return beta0_ + (1.0 - beta0_) * frac;
}

void ReplayBuffer::push(Transition t) {
  if (data_.size() < capacity_) {
    data_.push_back(std::move(t));
    priorities_.push_back(max_priority_);
  } else {
    data_[write_pos_] = std::move(t);
    priorities_[write_pos_] = max_priority_;
    write_pos_ = (write_pos_ + 1) % capacity_;
  }
}

std::vector<double> ReplayBuffer::sampling_probabilities() const {
  const std::size_t n = data_.size();
  std::vector<double> p(n, 0.0);
  if (n == 0) return p;
  if (mode_ == ReplayMode::Uniform) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
    return p;
  }
  if (mode_ == ReplayMode::Proportional) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = std::pow(priorities_[i], alpha_);
      total += p[i];
    }
    for (auto& v : p) v /= total;
    return p;
  }
  // Rank mode: P(i) proportional to (1/rank_i)^alpha, rank 1 = largest
  // priority; ties resolved by insertion index for determinism.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (priorities_[a] != priorities_[b]) return priorities_[a] > priorities_[b];
    return a < b;
  });
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double w = std::pow(1.0 / static_cast<double>(r + 1), alpha_);
    p[order[r]] = w;
    total += w;
  }
  for (auto& v : p) v /= total;
  return p;
}

ReplayBuffer::Batch ReplayBuffer::sample(std::size_t batch_size, Rng& rng) {
  if (data_.empty()) throw std::logic_error("cannot sample from an empty buffer");
  const std::size_t n = data_.size();
  Batch batch;
  batch.indices.reserve(batch_size);
  batch.weights.assign(batch_size, 1.0);

  if (mode_ == ReplayMode::Uniform) {
    for (std::size_t k = 0; k < batch_size; ++k)
      batch.indices.push_back(rng.uniform_index(n));
  } else {
    const std::vector<double> p = sampling_probabilities();
    std::vector<double> cdf(n);
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    const double b = beta();
    for (std::size_t k = 0; k < batch_size; ++k) {
      const double u = rng.uniform() * cdf.back();
      const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
      const auto idx = static_cast<std::size_t>(std::distance(cdf.begin(), it));
      batch.indices.push_back(std::min(idx, n - 1));
      batch.weights[k] =
          std::pow(static_cast<double>(n) * p[batch.indices[k]], -b);
    }
    const double wmax = *std::max_element(batch.weights.begin(), batch.weights.end());
    for (auto& w : batch.weights) w /= wmax;
  }
  ++sample_calls_;
  last_sampled_ = batch.indices;
  return batch;
}

void ReplayBuffer::update_priorities(const std::vector<std::size_t>& indices,
                                     const std::vector<double>& td_errors) {
  if (mode_ == ReplayMode::Uniform) return;
  if (indices != last_sampled_)
    throw ContractViolation("update_priorities must use the latest sampled indices");
  if (td_errors.size() != indices.size())
    throw std::invalid_argument("td_errors size mismatch");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const double p = std::abs(td_errors[k]) + 1e-6;
    priorities_[indices[k]] = p;
    max_priority_ = std::max(max_priority_, p);
  }
}

}  // namespace rlqas::agents
