#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labnoise/trainer.hpp"

namespace labnoise {

enum class SweepKind { prior_only, attack_only, combined };

const char* to_string(SweepKind kind);

/// A grid of training runs. prior_only varies p1 at p2 = 0; attack_only
/// varies p2 at p1 = 0; combined varies p1 at one fixed p2 and additionally
/// runs the matching p2 = 0 baseline cells so auc_gain can be computed
/// against the same prior corruption (the prior-noise stream depends only on
/// the seed, so a given (seed, p1) flips the same labels in both).
struct SweepSpec {
  SweepKind kind = SweepKind::prior_only;
  std::vector<double> p1_values;
  std::vector<double> p2_values;  // combined: exactly one entry
  std::vector<std::uint64_t> seeds;
  TrainConfig base;  // per-cell runs override noise, attack, and seed
  int threads = 0;   // 0 = hardware concurrency
};

struct SweepRow {
  double p1 = 0.0;
  double p2 = 0.0;
  std::uint64_t seed = 0;
  double test_auc = 0.0;
  double test_accuracy = 0.0;
  int best_epoch = 0;
  int stopped_epoch = 0;
  bool failed = false;
  std::string error;
};

struct SweepAggregate {
  double p1 = 0.0;
  double p2 = 0.0;
  int n_runs = 0;  // successful runs only
  double mean_auc = 0.0;
  double std_auc = 0.0;
  double mean_accuracy = 0.0;
  bool has_auc_gain = false;
  double auc_gain = 0.0;  // mean AUC minus the matching p2 = 0 cell's mean
};

struct SweepResult {
  SweepKind kind = SweepKind::prior_only;
  std::vector<SweepRow> rows;
  std::vector<SweepAggregate> aggregates;
};

/// Runs every cell (in parallel when threads != 1) and aggregates. Failed
/// cells are recorded in their rows, never fatal. Row and aggregate order is
/// a deterministic function of the spec alone.
SweepResult run_sweep(const SweepSpec& spec);

/// Long-format CSV: one "run" row per (p1, p2, seed) and one "aggregate" row
/// per cell, with auc_gain populated for combined attack cells.
void write_sweep_csv(const SweepResult& result, const std::string& path);

/// Parses the JSON sweep configuration (see README for the schema).
SweepSpec parse_sweep_config(const std::string& json_text);

}  // namespace labnoise
