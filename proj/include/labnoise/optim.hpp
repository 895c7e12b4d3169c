#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "labnoise/model.hpp"

namespace labnoise {

struct OptimizerConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename Scalar>
struct OptimizerState {
  Eigen::VectorX<Scalar> m;
  Eigen::VectorX<Scalar> v;
  long long t = 0;

  static OptimizerState zeros(long n) {
    return {Eigen::VectorX<Scalar>::Zero(n), Eigen::VectorX<Scalar>::Zero(n), 0};
  }
};

/// One Adam update with bias-corrected moments; epsilon sits outside the
/// square root. Throws on non-finite gradient coordinates.
template <typename Scalar>
void adam_step(Eigen::VectorX<Scalar>& params, OptimizerState<Scalar>& state,
               const Eigen::VectorX<Scalar>& gradients,
               const OptimizerConfig& config) {
  if (params.size() != gradients.size() || params.size() != state.m.size() ||
      params.size() != state.v.size()) {
    throw std::invalid_argument("adam_step: vector length mismatch");
  }
  if (!gradients.allFinite()) {
    long bad = 0;
    for (long i = 0; i < gradients.size(); ++i) {
      if (!std::isfinite(gradients[i])) {
        bad = i;
        break;
      }
    }
    throw std::runtime_error("adam_step: non-finite gradient at coordinate " +
                             std::to_string(bad));
  }

  state.t += 1;
  const Scalar b1 = static_cast<Scalar>(config.beta1);
  const Scalar b2 = static_cast<Scalar>(config.beta2);
  state.m = b1 * state.m + (Scalar(1) - b1) * gradients;
  state.v = (b2 * state.v).array() +
            (Scalar(1) - b2) * gradients.array().square();
  const Scalar corr1 = Scalar(1) - std::pow(b1, static_cast<Scalar>(state.t));
  const Scalar corr2 = Scalar(1) - std::pow(b2, static_cast<Scalar>(state.t));
  params.array() -= static_cast<Scalar>(config.learning_rate) *
                    (state.m.array() / corr1) /
                    ((state.v.array() / corr2).sqrt() +
                     static_cast<Scalar>(config.epsilon));
}

enum class StopDecision { continue_training, stop };

/// Tracks the best validation metric seen so far and the checkpoint that
/// produced it. Improvement is strict; ties count as stagnation.
template <typename Scalar>
struct EarlyStopState {
  double best_metric = -std::numeric_limits<double>::infinity();
  int best_epoch = 0;
  ModelState<Scalar> best_checkpoint;
  int epochs_since_improvement = 0;
  int patience = 8;
  int max_epochs = 100;
};

/// Feed epochs in increasing order. Returns stop once the metric has failed
/// to improve for `patience` consecutive epochs or the epoch cap is hit; the
/// caller then restores best_checkpoint.
template <typename Scalar>
StopDecision early_stop_update(EarlyStopState<Scalar>& state, int epoch,
                               double val_metric,
                               const ModelState<Scalar>& checkpoint) {
  if (val_metric > state.best_metric) {
    state.best_metric = val_metric;
    state.best_epoch = epoch;
    state.best_checkpoint = checkpoint;
    state.epochs_since_improvement = 0;
  } else {
    state.epochs_since_improvement += 1;
  }
  if (state.epochs_since_improvement >= state.patience ||
      epoch >= state.max_epochs) {
    return StopDecision::stop;
  }
  return StopDecision::continue_training;
}

}  // namespace labnoise
