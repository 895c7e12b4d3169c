#include "labnoise/split.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace labnoise {

DatasetSplit split_dataset(const std::vector<LabeledExample>& examples,
                           const std::array<double, 3>& fractions,
                           RngStream& rng) {
  if (examples.empty()) {
    throw std::invalid_argument("split_dataset: empty input");
  }
  double sum = fractions[0] + fractions[1] + fractions[2];
  if (std::abs(sum - 1.0) > 1e-9 || fractions[0] < 0 || fractions[1] < 0 ||
      fractions[2] < 0) {
    throw std::invalid_argument("split_dataset: fractions must be >= 0 and sum to 1");
  }

  // Stratify: per-class index pools, each shuffled independently.
  std::vector<std::size_t> pools[2];
  for (std::size_t i = 0; i < examples.size(); ++i) {
    int y = examples[i].clean_label;
    if (y != 0 && y != 1) {
      throw std::invalid_argument("split_dataset: labels must be 0 or 1");
    }
    pools[y].push_back(i);
  }
  rng.shuffle(pools[0]);
  rng.shuffle(pools[1]);

  DatasetSplit out;
  out.split_fractions = fractions;
  for (const auto& pool : pools) {
    auto n = static_cast<double>(pool.size());
    // Cumulative rounding keeps each boundary within one example of exact.
    auto c1 = static_cast<std::size_t>(std::llround(fractions[0] * n));
    auto c2 = static_cast<std::size_t>(std::llround((fractions[0] + fractions[1]) * n));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& ex = examples[pool[i]];
      if (i < c1) {
        out.train.push_back(ex);
      } else if (i < c2) {
        out.validation.push_back(ex);
      } else {
        out.test.push_back(ex);
      }
    }
  }

  if (out.train.empty() || out.validation.empty() || out.test.empty()) {
    throw std::invalid_argument("split_dataset: a partition would be empty");
  }
  return out;
}

}  // namespace labnoise
