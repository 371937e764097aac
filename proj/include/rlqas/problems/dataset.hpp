#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rlqas/qsim/gate.hpp"

namespace rlqas::problems {

struct Sample {
  std::array<double, 2> x;
  int label;  // 0 or 1
};

struct ClassificationDataset {
  std::vector<Sample> train;
  std::vector<Sample> test;
  std::uint64_t seed = 0;
};

/// Pure label rule shared by the generator: 1 iff the point lies outside
/// the circle of squared radius 0.15 centred at (0.5, 0.5).
int circle_label(double x1, double x2);

/// Uniform features in [0,1]^2, circle-rule labels, classes rebalanced by
/// resampling until both splits are within 40-60%.
ClassificationDataset generate_vqc_dataset(std::uint64_t seed, int n_train, int n_test);

/// Fixed data-encoding prefix: RY(x1*pi) on qubit 0 and RY(x2*pi) on qubit 1.
std::vector<qsim::Gate> encode_features(const std::array<double, 2>& x);

}  // namespace rlqas::problems
