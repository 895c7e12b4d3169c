#include "labnoise/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace labnoise {

namespace {

struct CellPlan {
  double p1;
  double p2;
  std::uint64_t seed;
};

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <typename T>
void require_unique(const std::vector<T>& values, const char* what) {
  std::set<T> seen(values.begin(), values.end());
  if (seen.size() != values.size()) {
    throw std::invalid_argument(std::string("sweep: duplicate ") + what);
  }
}

void validate_probabilities(const std::vector<double>& values,
                            const char* what) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument(std::string("sweep: ") + what +
                                  " must lie in [0, 1]");
    }
  }
}

std::vector<CellPlan> plan_cells(const SweepSpec& spec) {
  std::vector<CellPlan> cells;
  switch (spec.kind) {
    case SweepKind::prior_only:
      if (spec.p1_values.empty()) {
        throw std::invalid_argument("sweep: prior_only needs p1_values");
      }
      for (double p1 : spec.p1_values) {
        for (auto seed : spec.seeds) cells.push_back({p1, 0.0, seed});
      }
      break;
    case SweepKind::attack_only:
      if (spec.p2_values.empty()) {
        throw std::invalid_argument("sweep: attack_only needs p2_values");
      }
      for (double p2 : spec.p2_values) {
        for (auto seed : spec.seeds) cells.push_back({0.0, p2, seed});
      }
      break;
    case SweepKind::combined:
      if (spec.p1_values.empty()) {
        throw std::invalid_argument("sweep: combined needs p1_values");
      }
      if (spec.p2_values.size() != 1) {
        throw std::invalid_argument(
            "sweep: combined needs exactly one fixed p2 value");
      }
      if (spec.p2_values[0] == 0.0) {
        throw std::invalid_argument(
            "sweep: combined p2 must be nonzero (0 is the baseline)");
      }
      // Baseline cells first per p1, then the attacked cells, so each
      // (p1, p2, seed) triple appears exactly once.
      for (double p1 : spec.p1_values) {
        for (auto seed : spec.seeds) cells.push_back({p1, 0.0, seed});
        for (auto seed : spec.seeds) {
          cells.push_back({p1, spec.p2_values[0], seed});
        }
      }
      break;
  }
  return cells;
}

SweepRow run_cell(const SweepSpec& spec, const CellPlan& cell) {
  SweepRow row;
  row.p1 = cell.p1;
  row.p2 = cell.p2;
  row.seed = cell.seed;
  try {
    TrainConfig config = spec.base;
    config.noise = NoiseSpec{cell.p1, cell.p1, spec.base.noise.mode};
    config.attack = AttackSpec{cell.p2};
    config.master_seed = cell.seed;
    TrainReport report = train(config);
    row.test_auc = report.test_auc;
    row.test_accuracy = report.test_accuracy;
    row.best_epoch = report.best_epoch;
    row.stopped_epoch = report.stopped_epoch;
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

}  // namespace

const char* to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::prior_only: return "prior_only";
    case SweepKind::attack_only: return "attack_only";
    case SweepKind::combined: return "combined";
  }
  return "unknown";
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.seeds.empty()) {
    throw std::invalid_argument("sweep: at least one seed required");
  }
  require_unique(spec.seeds, "seeds");
  require_unique(spec.p1_values, "p1_values");
  require_unique(spec.p2_values, "p2_values");
  validate_probabilities(spec.p1_values, "p1_values");
  validate_probabilities(spec.p2_values, "p2_values");

  const auto cells = plan_cells(spec);
  SweepResult result;
  result.kind = spec.kind;
  result.rows.resize(cells.size());

  // Cells are independent; results land in preassigned slots, so ordering
  // does not depend on scheduling.
  unsigned n_threads = spec.threads > 0
                           ? static_cast<unsigned>(spec.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads,
                                 static_cast<unsigned>(cells.size()));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      result.rows[i] = run_cell(spec, cells[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          result.rows[i] = run_cell(spec, cells[i]);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  // Aggregate per (p1, p2) cell, in first-appearance order.
  std::vector<std::pair<double, double>> cell_keys;
  for (const auto& c : cells) {
    std::pair<double, double> key{c.p1, c.p2};
    if (cell_keys.empty() || cell_keys.back() != key) {
      bool seen = false;
      for (const auto& k : cell_keys) seen = seen || k == key;
      if (!seen) cell_keys.push_back(key);
    }
  }
  for (const auto& [p1, p2] : cell_keys) {
    SweepAggregate agg;
    agg.p1 = p1;
    agg.p2 = p2;
    double sum = 0.0, sum_acc = 0.0;
    std::vector<double> aucs;
    for (const auto& row : result.rows) {
      if (row.failed || row.p1 != p1 || row.p2 != p2) continue;
      aucs.push_back(row.test_auc);
      sum += row.test_auc;
      sum_acc += row.test_accuracy;
    }
    agg.n_runs = static_cast<int>(aucs.size());
    if (agg.n_runs > 0) {
      agg.mean_auc = sum / agg.n_runs;
      agg.mean_accuracy = sum_acc / agg.n_runs;
      double ss = 0.0;
      for (double a : aucs) ss += (a - agg.mean_auc) * (a - agg.mean_auc);
      agg.std_auc = agg.n_runs > 1 ? std::sqrt(ss / (agg.n_runs - 1)) : 0.0;
    }
    result.aggregates.push_back(agg);
  }

  // auc_gain: attacked combined cells against the matching p2 = 0 baseline.
  if (spec.kind == SweepKind::combined) {
    for (auto& agg : result.aggregates) {
      if (agg.p2 == 0.0) continue;
      for (const auto& base : result.aggregates) {
        if (base.p2 == 0.0 && base.p1 == agg.p1 && base.n_runs > 0 &&
            agg.n_runs > 0) {
          agg.has_auc_gain = true;
          agg.auc_gain = agg.mean_auc - base.mean_auc;
        }
      }
    }
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write sweep csv: " + path);
  }
  out << "row_type,kind,p1,p2,seed,test_auc,test_accuracy,best_epoch,"
         "stopped_epoch,n_runs,mean_auc,std_auc,mean_accuracy,auc_gain,"
         "status,error\n";
  const char* kind = to_string(result.kind);
  for (const auto& r : result.rows) {
    out << "run," << kind << ',' << format_double(r.p1) << ','
        << format_double(r.p2) << ',' << r.seed << ',';
    if (r.failed) {
      out << ",,,,,,,,failed," << r.error << "\n";
    } else {
      out << format_double(r.test_auc) << ',' << format_double(r.test_accuracy)
          << ',' << r.best_epoch << ',' << r.stopped_epoch
          << ",,,,,,ok,\n";
    }
  }
  for (const auto& a : result.aggregates) {
    out << "aggregate," << kind << ',' << format_double(a.p1) << ','
        << format_double(a.p2) << ",,,,,," << a.n_runs << ','
        << format_double(a.mean_auc) << ',' << format_double(a.std_auc) << ','
        << format_double(a.mean_accuracy) << ','
        << (a.has_auc_gain ? format_double(a.auc_gain) : std::string()) << ','
        << (a.n_runs > 0 ? "ok" : "empty") << ",\n";
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

SweepSpec parse_sweep_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }

  SweepSpec spec;
  std::string kind = j.value("kind", "prior_only");
  if (kind == "prior_only") {
    spec.kind = SweepKind::prior_only;
  } else if (kind == "attack_only") {
    spec.kind = SweepKind::attack_only;
  } else if (kind == "combined") {
    spec.kind = SweepKind::combined;
  } else {
    throw std::invalid_argument("sweep config: unknown kind '" + kind + "'");
  }

  spec.p1_values = j.value("p1_values", std::vector<double>{});
  spec.p2_values = j.value("p2_values", std::vector<double>{});
  spec.seeds = j.value("seeds", std::vector<std::uint64_t>{});
  spec.threads = j.value("threads", 0);

  if (j.contains("train")) {
    const auto& t = j["train"];
    if (t.contains("model")) {
      std::string m = t["model"];
      if (m == "logistic") {
        spec.base.model_spec.kind = ModelKind::logistic;
      } else if (m == "mlp") {
        spec.base.model_spec.kind = ModelKind::mlp;
      } else {
        throw std::invalid_argument("sweep config: unknown model '" + m + "'");
      }
    }
    spec.base.model_spec.hidden_units =
        t.value("hidden_units", spec.base.model_spec.hidden_units);
    spec.base.batch_size = t.value("batch_size", spec.base.batch_size);
    spec.base.patience = t.value("patience", spec.base.patience);
    spec.base.max_epochs = t.value("max_epochs", spec.base.max_epochs);
    spec.base.optimizer.learning_rate =
        t.value("learning_rate", spec.base.optimizer.learning_rate);
    if (t.contains("noise_mode")) {
      std::string m = t["noise_mode"];
      if (m == "bernoulli") {
        spec.base.noise.mode = NoiseMode::bernoulli;
      } else if (m == "exact_count") {
        spec.base.noise.mode = NoiseMode::exact_count;
      } else {
        throw std::invalid_argument("sweep config: unknown noise_mode '" + m +
                                    "'");
      }
    }
    if (t.contains("dataset")) {
      const auto& d = t["dataset"];
      std::string source = d.value("source", "synthetic");
      if (source == "csv") {
        spec.base.csv_path = d.at("path").get<std::string>();
        spec.base.synthetic.reset();
      } else if (source == "synthetic") {
        SyntheticConfig sc;
        sc.n_examples = d.value("n_examples", sc.n_examples);
        sc.n_features = d.value("n_features", sc.n_features);
        sc.class_separation = d.value("class_separation", sc.class_separation);
        sc.positive_fraction =
            d.value("positive_fraction", sc.positive_fraction);
        spec.base.synthetic = sc;
        spec.base.csv_path.clear();
      } else {
        throw std::invalid_argument("sweep config: unknown dataset source '" +
                                    source + "'");
      }
    }
  }
  return spec;
}

}  // namespace labnoise
