#include "rlqas/problems/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "rlqas/rng.hpp"

namespace rlqas::problems {

int circle_label(double x1, double x2) {
  const double dx = x1 - 0.5;
  const double dy = x2 - 0.5;
  return (dx * dx + dy * dy > 0.15) ? 1 : 0;
}

namespace {

// Fills a split with resampling so neither class exceeds 60%.
std::vector<Sample> draw_split(Rng& rng, int n) {
  const int cap = static_cast<int>(std::floor(0.6 * n));
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(n));
  int counts[2] = {0, 0};
  while (static_cast<int>(out.size()) < n) {
    const double x1 = rng.uniform();
    const double x2 = rng.uniform();
    const int label = circle_label(x1, x2);
    if (counts[label] >= cap) continue;
    ++counts[label];
    out.push_back({{x1, x2}, label});
  }
  return out;
}

}  // namespace

ClassificationDataset generate_vqc_dataset(std::uint64_t seed, int n_train, int n_test) {
  if (n_train < 10 || n_test < 10)
    throw std::invalid_argument("dataset needs at least 10 train and test samples");
  Rng rng(seed ^ 0x5eedda7aULL);
  ClassificationDataset ds;
  ds.seed = seed;
  ds.train = draw_split(rng, n_train);
  ds.test = draw_split(rng, n_test);
  return ds;
}

std::vector<qsim::Gate> encode_features(const std::array<double, 2>& x) {
  for (double v : x)
    if (v < 0.0 || v > 1.0)
      throw std::invalid_argument("features must lie in [0,1]");
  return {qsim::Gate::ry(0, x[0] * M_PI), qsim::Gate::ry(1, x[1] * M_PI)};
}

}  // namespace rlqas::problems
