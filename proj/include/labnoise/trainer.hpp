#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "labnoise/dataset.hpp"
#include "labnoise/metrics.hpp"
#include "labnoise/model.hpp"
#include "labnoise/noise.hpp"
#include "labnoise/optim.hpp"
#include "labnoise/types.hpp"

namespace labnoise {

/// Full recipe for one training run. Every random stream is derived from
/// master_seed, so a config determines its TrainReport bit for bit.
struct TrainConfig {
  ModelSpec model_spec;
  OptimizerConfig optimizer;
  int batch_size = 16;
  int patience = 8;
  int max_epochs = 100;
  NoiseSpec noise;    // prior corruption (p1)
  AttackSpec attack;  // per-epoch flips (p2)
  std::uint64_t master_seed = 1;

  // Dataset source: either synthetic generation or a CSV path.
  std::optional<SyntheticConfig> synthetic = SyntheticConfig{};
  std::string csv_path;

  std::array<double, 3> split_fractions{0.7, 0.1, 0.2};
  // Ablation only: also corrupt validation labels with the prior-noise spec.
  bool corrupt_validation = false;
};

struct EpochRecord {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double val_accuracy = 0.0;
  ScenarioCounts scenarios;  // this epoch's attack, bucketed by prior state
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;
  int stopped_epoch = 0;
  int n_actual = 0;  // elapsed epochs, feeds estimate_epoch_count
  double best_val_accuracy = 0.0;
  double test_auc = 0.0;       // clean test labels only
  double test_accuracy = 0.0;  // clean test labels only
  long n_train = 0;
  long n_validation = 0;
  long n_test = 0;
  TrainConfig config;  // echo
};

/// Runs the whole pipeline: load/generate, split 70/10/20, inject prior
/// noise into the train split only, then per epoch attack labels, shuffle,
/// mini-batch Adam on BCE, clean-validation early stopping with best-epoch
/// restore, and finally clean-test AUC/accuracy.
TrainReport train(const TrainConfig& config);

/// Variant that also returns the restored best model.
TrainReport train(const TrainConfig& config, ModelState<double>& final_model);

/// Scores a split with the given model and evaluates against clean labels.
EvalResult evaluate_checkpoint(const ModelSpec& spec,
                               const ModelState<double>& model,
                               const std::vector<LabeledExample>& split);

}  // namespace labnoise
