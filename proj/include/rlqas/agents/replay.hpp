#pragma once

#include <cstdint>
#include <vector>

#include "rlqas/env/observation.hpp"
#include "rlqas/rng.hpp"

namespace rlqas::agents {

struct Transition {
  env::QasObservation s;
  int action = 0;
  double reward = 0.0;
  env::QasObservation s2;
  bool done = false;
  std::vector<std::uint8_t> mask2;  // legal-action mask of s2
};

enum class ReplayMode { Uniform, Proportional, Rank };

/// FIFO transition store with optional prioritized sampling. New entries get
/// the current maximum priority; priorities refresh to |td| + 1e-6 after
/// each update. Importance weights are (N P(i))^-beta normalized by the
/// batch maximum, with beta annealed linearly to 1.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, ReplayMode mode, double alpha = 0.6,
               double beta0 = 0.4, std::uint64_t beta_anneal_steps = 100000);

  std::size_t size() const { return data_.size(); }
  std::size_t capacity() const { return capacity_; }
  ReplayMode mode() const { return mode_; }
  double beta() const;

  void push(Transition t);
  const Transition& at(std::size_t i) const { return data_[i]; }

  struct Batch {
    std::vector<std::size_t> indices;
    std::vector<double> weights;
  };
  Batch sample(std::size_t batch_size, Rng& rng);

  /// Indices must be exactly those returned by the latest sample() call.
  void update_priorities(const std::vector<std::size_t>& indices,
                         const std::vector<double>& td_errors);

  /// Sampling distribution over current entries (for tests).
  std::vector<double> sampling_probabilities() const;

 private:
  std::size_t capacity_;
  ReplayMode mode_;
  double alpha_;
  double beta0_;
  std::uint64_t beta_anneal_steps_;
  std::uint64_t sample_calls_ = 0;

  std::vector<Transition> data_;
  std::vector<double> priorities_;
  std::size_t write_pos_ = 0;
  double max_priority_ = 1.0;
  std::vector<std::size_t> last_sampled_;
};

}  // namespace rlqas::agents
