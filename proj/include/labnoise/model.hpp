#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "labnoise/rng.hpp"

namespace labnoise {

enum class ModelKind { logistic, mlp };

/// Architecture description. Both kinds end in a single sigmoidal output
/// unit. init_scale = 0 selects the Glorot uniform limit per layer; a
/// positive value overrides the uniform half-width everywhere.
struct ModelSpec {
  ModelKind kind = ModelKind::logistic;
  int n_features = 16;
  int hidden_units = 32;  // mlp only
  double init_scale = 0.0;
};

inline long param_count(const ModelSpec& spec) {
  const long d = spec.n_features;
  const long h = spec.hidden_units;
  switch (spec.kind) {
    case ModelKind::logistic:
      return d + 1;
    case ModelKind::mlp:
      return d * h + h + h + 1;
  }
  return 0;
}

/// Flat parameter vector. Layout is weights then biases, layer by layer:
///   logistic: [w(d), b(1)]
///   mlp:      [W1(d*h, column-major), b1(h), w2(h), b2(1)]
template <typename Scalar>
struct ModelState {
  Eigen::VectorX<Scalar> params;
};

namespace detail {

template <typename Scalar>
Scalar sigmoid(Scalar z) {
  Scalar v;
  if (z >= Scalar(0)) {
    v = Scalar(1) / (Scalar(1) + std::exp(-z));
  } else {
    Scalar e = std::exp(z);
    v = e / (Scalar(1) + e);
  }
  // Keep outputs strictly inside (0, 1) even at saturation.
  constexpr Scalar lo = std::numeric_limits<Scalar>::min();
  const Scalar hi = Scalar(1) - std::numeric_limits<Scalar>::epsilon() / 2;
  return std::min(hi, std::max(lo, v));
}

template <typename Scalar>
void check_batch(const ModelSpec& spec,
                 const Eigen::MatrixX<Scalar>& batch) {
  if (batch.cols() != spec.n_features) {
    throw std::invalid_argument("model: batch has wrong feature count");
  }
  if (batch.rows() == 0) {
    throw std::invalid_argument("model: empty batch");
  }
}

}  // namespace detail

/// Glorot-style uniform weights, zero biases. Weights are drawn in layout
/// order so the result is a pure function of the stream.
template <typename Scalar>
ModelState<Scalar> init_model(const ModelSpec& spec, RngStream& rng) {
  if (spec.n_features < 1) {
    throw std::invalid_argument("model: n_features must be >= 1");
  }
  if (spec.kind == ModelKind::mlp && spec.hidden_units < 1) {
    throw std::invalid_argument("model: hidden_units must be >= 1");
  }

  const long d = spec.n_features;
  const long h = spec.hidden_units;
  ModelState<Scalar> state;
  state.params = Eigen::VectorX<Scalar>::Zero(param_count(spec));

  auto fill_uniform = [&](long offset, long count, long fan_in, long fan_out) {
    double limit = spec.init_scale > 0.0
                       ? spec.init_scale
                       : std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (long i = 0; i < count; ++i) {
      state.params[offset + i] =
          static_cast<Scalar>((2.0 * rng.uniform01() - 1.0) * limit);
    }
  };

  if (spec.kind == ModelKind::logistic) {
    fill_uniform(0, d, d, 1);
  } else {
    fill_uniform(0, d * h, d, h);       // W1
    fill_uniform(d * h + h, h, h, 1);   // w2 (b1 stays zero)
  }
  return state;
}

/// Sigmoid probabilities for a (batch x n_features) matrix, one per row.
template <typename Scalar>
Eigen::VectorX<Scalar> forward(const ModelSpec& spec,
                               const ModelState<Scalar>& model,
                               const Eigen::MatrixX<Scalar>& batch) {
  detail::check_batch(spec, batch);
  const long d = spec.n_features;
  const long h = spec.hidden_units;
  const auto& theta = model.params;

  Eigen::VectorX<Scalar> logits;
  if (spec.kind == ModelKind::logistic) {
    auto w = theta.head(d);
    logits = (batch * w).array() + theta[d];
  } else {
    Eigen::Map<const Eigen::MatrixX<Scalar>> w1(theta.data(), d, h);
    auto b1 = theta.segment(d * h, h);
    auto w2 = theta.segment(d * h + h, h);
    Scalar b2 = theta[d * h + 2 * h];
    Eigen::MatrixX<Scalar> hidden =
        ((batch * w1).rowwise() + b1.transpose()).array().tanh();
    logits = (hidden * w2).array() + b2;
  }
  return logits.unaryExpr([](Scalar z) { return detail::sigmoid(z); });
}

/// Mean binary cross-entropy with probabilities clamped to
/// [1e-12, 1 - 1e-12].
template <typename Scalar>
Scalar bce_loss(const Eigen::VectorX<Scalar>& probabilities,
                const Eigen::VectorX<Scalar>& labels) {
  if (probabilities.size() != labels.size()) {
    throw std::invalid_argument("bce_loss: length mismatch");
  }
  if (probabilities.size() == 0) {
    throw std::invalid_argument("bce_loss: empty batch");
  }
  constexpr Scalar eps = Scalar(1e-12);
  Scalar acc = 0;
  for (long i = 0; i < probabilities.size(); ++i) {
    Scalar p = std::min(Scalar(1) - eps, std::max(eps, probabilities[i]));
    acc -= labels[i] * std::log(p) + (Scalar(1) - labels[i]) * std::log1p(-p);
  }
  return acc / static_cast<Scalar>(probabilities.size());
}

/// Exact gradient of bce_loss(forward(.)) with respect to every parameter,
/// in the ModelState layout.
template <typename Scalar>
Eigen::VectorX<Scalar> backward(const ModelSpec& spec,
                                const ModelState<Scalar>& model,
                                const Eigen::MatrixX<Scalar>& batch,
                                const Eigen::VectorX<Scalar>& labels) {
  detail::check_batch(spec, batch);
  if (labels.size() != batch.rows()) {
    throw std::invalid_argument("backward: label count != batch rows");
  }
  const long d = spec.n_features;
  const long h = spec.hidden_units;
  const long n = batch.rows();
  const auto& theta = model.params;
  const Scalar inv_n = Scalar(1) / static_cast<Scalar>(n);

  Eigen::VectorX<Scalar> grad = Eigen::VectorX<Scalar>::Zero(theta.size());

  if (spec.kind == ModelKind::logistic) {
    auto w = theta.head(d);
    Eigen::VectorX<Scalar> logits = (batch * w).array() + theta[d];
    Eigen::VectorX<Scalar> probs =
        logits.unaryExpr([](Scalar z) { return detail::sigmoid(z); });
    Eigen::VectorX<Scalar> delta = (probs - labels) * inv_n;
    grad.head(d) = batch.transpose() * delta;
    grad[d] = delta.sum();
  } else {
    Eigen::Map<const Eigen::MatrixX<Scalar>> w1(theta.data(), d, h);
    auto b1 = theta.segment(d * h, h);
    auto w2 = theta.segment(d * h + h, h);
    Scalar b2 = theta[d * h + 2 * h];

    Eigen::MatrixX<Scalar> hidden =
        ((batch * w1).rowwise() + b1.transpose()).array().tanh();
    Eigen::VectorX<Scalar> logits = (hidden * w2).array() + b2;
    Eigen::VectorX<Scalar> probs =
        logits.unaryExpr([](Scalar z) { return detail::sigmoid(z); });

    Eigen::VectorX<Scalar> delta = (probs - labels) * inv_n;  // dL/dlogit
    // dL/dhidden, through tanh'.
    Eigen::MatrixX<Scalar> dhidden =
        (delta * w2.transpose()).array() *
        (Scalar(1) - hidden.array().square());

    Eigen::Map<Eigen::MatrixX<Scalar>> gw1(grad.data(), d, h);
    gw1 = batch.transpose() * dhidden;
    grad.segment(d * h, h) = dhidden.colwise().sum();
    grad.segment(d * h + h, h) = hidden.transpose() * delta;
    grad[d * h + 2 * h] = delta.sum();
  }
  return grad;
}

}  // namespace labnoise
