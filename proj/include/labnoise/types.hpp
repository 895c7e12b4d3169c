#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

namespace labnoise {

/// One example: feature vector, the true label, and the label the trainer
/// actually sees (possibly corrupted before training).
struct LabeledExample {
  std::int64_t id = 0;
  Eigen::VectorXd features;
  int clean_label = 0;    // in {0, 1}
  int stored_label = 0;   // in {0, 1}; differs from clean_label iff corrupted
  bool prior_corrupted = false;

  bool consistent() const {
    return prior_corrupted == (stored_label != clean_label);
  }
};

struct DatasetSplit {
  std::vector<LabeledExample> train;
  std::vector<LabeledExample> validation;
  std::vector<LabeledExample> test;
  std::array<double, 3> split_fractions{0.7, 0.1, 0.2};
};

}  // namespace labnoise
