#pragma once

#include <utility>
#include <vector>

#include "labnoise/rng.hpp"
#include "labnoise/types.hpp"

namespace labnoise {

enum class NoiseMode {
  bernoulli,    // each label flips independently with its class probability
  exact_count,  // exactly round(p * class size) labels flip, chosen uniformly
};

/// Prior corruption applied once, before training. The paper's symmetric
/// setting is p_pos == p_neg == p1.
struct NoiseSpec {
  double p_pos = 0.0;  // P(stored = 0 | clean = 1)
  double p_neg = 0.0;  // P(stored = 1 | clean = 0)
  NoiseMode mode = NoiseMode::bernoulli;

  static NoiseSpec symmetric(double p1, NoiseMode mode = NoiseMode::bernoulli) {
    return {p1, p1, mode};
  }
};

/// Transient per-epoch flip probability.
struct AttackSpec {
  double p2 = 0.0;
};

/// Per-epoch label-state probabilities (prior state x epoch flip). Notation:
/// cl_given_co is a clean effective label derived from a corrupted stored one.
struct ScenarioProbabilities {
  double p_cl_given_cl = 0.0;
  double p_cl_given_co = 0.0;
  double p_co_given_cl = 0.0;
  double p_co_given_co = 0.0;
  double p_clean = 0.0;    // p_cl_given_cl + p_cl_given_co
  double p_corrupt = 0.0;  // p_co_given_cl + p_co_given_co
};

struct ScenarioCounts {
  long long n_cl_given_cl = 0;
  long long n_cl_given_co = 0;
  long long n_co_given_cl = 0;
  long long n_co_given_co = 0;

  long long total() const {
    return n_cl_given_cl + n_cl_given_co + n_co_given_cl + n_co_given_co;
  }
};

/// Flips stored labels once, before training. Input must be uncorrupted
/// (stored == clean everywhere); clean labels are never touched.
std::vector<LabeledExample> inject_prior_noise(
    const std::vector<LabeledExample>& examples, const NoiseSpec& spec,
    RngStream& rng);

/// Draws one epoch's transient attack: epoch_labels[i] = stored_labels[i] XOR
/// Bernoulli(p2). Stored labels are not modified; each epoch uses a fresh
/// stream so attacks never accumulate.
std::pair<std::vector<int>, std::vector<bool>> epoch_attack_labels(
    const std::vector<int>& stored_labels, const AttackSpec& spec,
    RngStream& epoch_rng);

/// The four products and two sums for prior rate p1 and attack rate p2.
ScenarioProbabilities scenario_probabilities(double p1, double p2);

/// Buckets each example by (prior state, epoch flip). An epoch flip on a
/// corrupted label restores it for that epoch (cl|co); a flip on a clean one
/// corrupts it (co|cl).
ScenarioCounts classify_scenarios(const std::vector<bool>& prior_corrupted,
                                  const std::vector<bool>& flip_mask);

}  // namespace labnoise
