#include "labnoise/noise.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace labnoise {

namespace {

void validate_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

void flip(LabeledExample& ex) {
  ex.stored_label = 1 - ex.stored_label;
  ex.prior_corrupted = (ex.stored_label != ex.clean_label);
}

}  // namespace

std::vector<LabeledExample> inject_prior_noise(
    const std::vector<LabeledExample>& examples, const NoiseSpec& spec,
    RngStream& rng) {
  validate_probability(spec.p_pos, "p_pos");
  validate_probability(spec.p_neg, "p_neg");
  for (const auto& ex : examples) {
    if (ex.stored_label != ex.clean_label || ex.prior_corrupted) {
      throw std::invalid_argument(
          "inject_prior_noise: input already contains corrupted labels");
    }
  }

  std::vector<LabeledExample> out = examples;
  if (spec.mode == NoiseMode::bernoulli) {
    for (auto& ex : out) {
      double p = ex.clean_label == 1 ? spec.p_pos : spec.p_neg;
      if (rng.bernoulli(p)) flip(ex);
    }
  } else {
    // exact_count: flip exactly round(p * class size) per class, uniformly
    // without replacement.
    std::vector<std::size_t> pools[2];
    for (std::size_t i = 0; i < out.size(); ++i) {
      pools[out[i].clean_label].push_back(i);
    }
    const double rates[2] = {spec.p_neg, spec.p_pos};
    for (int label = 0; label <= 1; ++label) {
      auto& pool = pools[label];
      auto n_flips = static_cast<std::size_t>(
          std::llround(rates[label] * static_cast<double>(pool.size())));
      rng.shuffle(pool);
      for (std::size_t i = 0; i < n_flips; ++i) {
        flip(out[pool[i]]);
      }
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<bool>> epoch_attack_labels(
    const std::vector<int>& stored_labels, const AttackSpec& spec,
    RngStream& epoch_rng) {
  validate_probability(spec.p2, "p2");
  std::vector<int> epoch_labels(stored_labels.size());
  std::vector<bool> flip_mask(stored_labels.size());
  for (std::size_t i = 0; i < stored_labels.size(); ++i) {
    bool flipped = epoch_rng.bernoulli(spec.p2);
    flip_mask[i] = flipped;
    epoch_labels[i] = flipped ? 1 - stored_labels[i] : stored_labels[i];
  }
  return {std::move(epoch_labels), std::move(flip_mask)};
}

ScenarioProbabilities scenario_probabilities(double p1, double p2) {
  validate_probability(p1, "p1");
  validate_probability(p2, "p2");
  ScenarioProbabilities s;
  s.p_cl_given_cl = (1.0 - p1) * (1.0 - p2);
  s.p_cl_given_co = p1 * p2;
  s.p_co_given_cl = (1.0 - p1) * p2;
  s.p_co_given_co = p1 * (1.0 - p2);
  s.p_clean = s.p_cl_given_cl + s.p_cl_given_co;
  s.p_corrupt = s.p_co_given_cl + s.p_co_given_co;
  return s;
}

ScenarioCounts classify_scenarios(const std::vector<bool>& prior_corrupted,
                                  const std::vector<bool>& flip_mask) {
  if (prior_corrupted.size() != flip_mask.size()) {
    throw std::invalid_argument("classify_scenarios: mismatched lengths");
  }
  ScenarioCounts c;
  for (std::size_t i = 0; i < prior_corrupted.size(); ++i) {
    if (prior_corrupted[i]) {
      if (flip_mask[i]) {
        ++c.n_cl_given_co;
      } else {
        ++c.n_co_given_co;
      }
    } else {
      if (flip_mask[i]) {
        ++c.n_co_given_cl;
      } else {
        ++c.n_cl_given_cl;
      }
    }
  }
  return c;
}

}  // namespace labnoise
