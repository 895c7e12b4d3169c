#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "labnoise/binom.hpp"
#include "labnoise/dataset.hpp"
#include "labnoise/model_io.hpp"
#include "labnoise/noise.hpp"
#include "labnoise/report_io.hpp"
#include "labnoise/rng.hpp"
#include "labnoise/sweep.hpp"
#include "labnoise/trainer.hpp"

namespace {

using namespace labnoise;

std::vector<int> read_history(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open history file: " + path);
  }
  std::vector<int> lengths;
  int value = 0;
  while (in >> value) lengths.push_back(value);
  if (!in.eof()) {
    throw std::invalid_argument("history file must contain integers only: " +
                                path);
  }
  return lengths;
}

struct TrainCliOptions {
  TrainConfig config;
  SyntheticConfig synthetic;
  std::string data_csv;
  std::string model = "logistic";
  double p1 = 0.0;
  std::string noise_mode = "bernoulli";
  std::string report_json;
  std::string epoch_csv;
  std::string save_model;
};

void add_train_flags(CLI::App* cmd, TrainCliOptions& opt) {
  cmd->add_option("--data", opt.data_csv,
                  "dataset CSV (default: synthetic generation)");
  cmd->add_option("--n", opt.synthetic.n_examples, "synthetic: example count")
      ->capture_default_str();
  cmd->add_option("--features", opt.synthetic.n_features,
                  "synthetic: feature count")
      ->capture_default_str();
  cmd->add_option("--separation", opt.synthetic.class_separation,
                  "synthetic: distance between class means")
      ->capture_default_str();
  cmd->add_option("--positive-fraction", opt.synthetic.positive_fraction,
                  "synthetic: positive class fraction")
      ->capture_default_str();
  cmd->add_option("--p1", opt.p1, "prior label flip probability")
      ->capture_default_str();
  cmd->add_option("--p2", opt.config.attack.p2,
                  "epoch-wise label flip probability")
      ->capture_default_str();
  cmd->add_option("--noise-mode", opt.noise_mode,
                  "prior noise mode: bernoulli or exact_count")
      ->capture_default_str();
  cmd->add_option("--model", opt.model, "model kind: logistic or mlp")
      ->capture_default_str();
  cmd->add_option("--hidden-units", opt.config.model_spec.hidden_units,
                  "mlp hidden units")
      ->capture_default_str();
  cmd->add_option("--batch-size", opt.config.batch_size, "mini-batch size")
      ->capture_default_str();
  cmd->add_option("--patience", opt.config.patience, "early-stopping patience")
      ->capture_default_str();
  cmd->add_option("--max-epochs", opt.config.max_epochs, "epoch cap")
      ->capture_default_str();
  cmd->add_option("--lr", opt.config.optimizer.learning_rate, "learning rate")
      ->capture_default_str();
  cmd->add_option("--seed", opt.config.master_seed, "master seed")
      ->capture_default_str();
  cmd->add_flag("--corrupt-validation", opt.config.corrupt_validation,
                "ablation: corrupt validation labels too");
}

NoiseMode parse_noise_mode(const std::string& name) {
  if (name == "bernoulli") return NoiseMode::bernoulli;
  if (name == "exact_count") return NoiseMode::exact_count;
  throw std::invalid_argument("unknown noise mode: " + name);
}

TrainConfig build_train_config(TrainCliOptions& opt) {
  TrainConfig config = opt.config;
  if (opt.model == "logistic") {
    config.model_spec.kind = ModelKind::logistic;
  } else if (opt.model == "mlp") {
    config.model_spec.kind = ModelKind::mlp;
  } else {
    throw std::invalid_argument("unknown model kind: " + opt.model);
  }
  config.noise = NoiseSpec::symmetric(opt.p1, parse_noise_mode(opt.noise_mode));
  if (!opt.data_csv.empty()) {
    config.csv_path = opt.data_csv;
    config.synthetic.reset();
  } else {
    config.synthetic = opt.synthetic;
  }
  return config;
}

int cmd_generate(const SyntheticConfig& synthetic, std::uint64_t seed,
                 const std::string& out_path) {
  RngStream rng = derive_stream(seed, StreamPurpose::data_gen, 0);
  auto examples = generate_synthetic(synthetic, rng);
  write_csv(examples, out_path);
  std::cout << "wrote " << examples.size() << " examples to " << out_path
            << "\n";
  return 0;
}

int cmd_inject(const std::string& in_path, const std::string& out_path,
               const std::string& mask_path, const NoiseSpec& spec,
               std::uint64_t seed) {
  auto examples = load_csv(in_path);
  RngStream rng = derive_stream(seed, StreamPurpose::prior_noise, 0);
  auto corrupted = inject_prior_noise(examples, spec, rng);
  write_csv(corrupted, out_path, /*with_corruption_columns=*/true);

  if (!mask_path.empty()) {
    std::ofstream mask(mask_path);
    if (!mask) {
      throw std::runtime_error("cannot write mask csv: " + mask_path);
    }
    mask << "id,clean_label,stored_label,prior_corrupted\n";
    for (const auto& ex : corrupted) {
      mask << ex.id << ',' << ex.clean_label << ',' << ex.stored_label << ','
           << (ex.prior_corrupted ? 1 : 0) << "\n";
    }
  }

  long flips = 0;
  for (const auto& ex : corrupted) flips += ex.prior_corrupted ? 1 : 0;
  std::cout << "flipped " << flips << " of " << corrupted.size()
            << " labels; wrote " << out_path << "\n";
  return 0;
}

int cmd_derive_p2(int k1, int k2, int n, const std::string& history_path) {
  if (!history_path.empty()) {
    n = estimate_epoch_count(read_history(history_path));
  }
  if (n <= 0) {
    throw std::invalid_argument("derive-p2: provide --n or --history");
  }
  if (k2 < 0) k2 = (n + 1) / 2;  // default anchor: half the epochs
  BinomialDerivation d = derive_p2(k1, k2, n);
  std::cout << "n " << d.n << "\n"
            << "k1 " << d.k1 << "\n"
            << "k2 " << d.k2 << "\n"
            << "p2 " << d.p2 << "\n"
            << "mu " << d.mu << "\n"
            << "prob_never_flipped " << d.prob_never_flipped << "\n"
            << "prob_majority_flipped " << d.prob_majority_flipped << "\n"
            << "symmetry_residual " << symmetry_residual(d) << "\n";
  return 0;
}

int cmd_train(TrainCliOptions& opt) {
  TrainConfig config = build_train_config(opt);
  ModelState<double> model;
  TrainReport report = train(config, model);
  if (!opt.report_json.empty()) write_report_json(report, opt.report_json);
  if (!opt.epoch_csv.empty()) write_epoch_csv(report, opt.epoch_csv);
  if (!opt.save_model.empty()) {
    save_checkpoint(opt.save_model, report.config.model_spec, model);
  }
  std::cout << "stopped_epoch " << report.stopped_epoch << "\n"
            << "best_epoch " << report.best_epoch << "\n"
            << "best_val_accuracy " << report.best_val_accuracy << "\n"
            << "test_auc " << report.test_auc << "\n"
            << "test_accuracy " << report.test_accuracy << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              int threads) {
  std::ifstream in(config_path);
  if (!in) {
    throw std::invalid_argument("cannot open sweep config: " + config_path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  SweepSpec spec = parse_sweep_config(buffer.str());
  if (threads >= 0) spec.threads = threads;
  SweepResult result = run_sweep(spec);
  write_sweep_csv(result, out_path);

  long failed = 0;
  for (const auto& row : result.rows) failed += row.failed ? 1 : 0;
  std::cout << "ran " << result.rows.size() << " cells (" << failed
            << " failed); wrote " << out_path << "\n";
  for (const auto& agg : result.aggregates) {
    std::cout << "p1=" << agg.p1 << " p2=" << agg.p2
              << " mean_auc=" << agg.mean_auc << " std=" << agg.std_auc;
    if (agg.has_auc_gain) std::cout << " auc_gain=" << agg.auc_gain;
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"label-noise laboratory: corruption, epoch attacks, sweeps"};
  app.require_subcommand(1);

  // generate
  SyntheticConfig gen_config;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a synthetic dataset CSV");
  generate->add_option("--out", gen_out, "output CSV path")->required();
  generate->add_option("--n", gen_config.n_examples, "example count")
      ->capture_default_str();
  generate->add_option("--features", gen_config.n_features, "feature count")
      ->capture_default_str();
  generate->add_option("--separation", gen_config.class_separation,
                       "distance between class means")
      ->capture_default_str();
  generate->add_option("--positive-fraction", gen_config.positive_fraction,
                       "positive class fraction")
      ->capture_default_str();
  generate->add_option("--seed", gen_seed, "master seed")->capture_default_str();

  // inject
  std::string inj_in, inj_out, inj_mask, inj_mode = "bernoulli";
  double inj_p1 = -1.0, inj_pp = -1.0, inj_pn = -1.0;
  std::uint64_t inj_seed = 1;
  auto* inject = app.add_subcommand("inject", "corrupt a dataset CSV");
  inject->add_option("--in", inj_in, "input CSV path")->required();
  inject->add_option("--out", inj_out, "corrupted CSV path")->required();
  inject->add_option("--mask-out", inj_mask, "flip-mask CSV path");
  inject->add_option("--p1", inj_p1, "symmetric flip probability");
  inject->add_option("--p-pos", inj_pp, "positive-class flip probability");
  inject->add_option("--p-neg", inj_pn, "negative-class flip probability");
  inject->add_option("--mode", inj_mode, "bernoulli or exact_count")
      ->capture_default_str();
  inject->add_option("--seed", inj_seed, "master seed")->capture_default_str();

  // derive-p2
  int dp_k1 = 0, dp_k2 = -1, dp_n = -1;
  std::string dp_history;
  auto* derive = app.add_subcommand(
      "derive-p2", "derive the epoch-wise flip probability from anchors");
  derive->add_option("--k1", dp_k1, "minimum-flip anchor")->capture_default_str();
  derive->add_option("--k2", dp_k2, "maximum-flip anchor (default ceil(n/2))");
  derive->add_option("--n", dp_n, "epoch count");
  derive->add_option("--history", dp_history,
                     "file of past run lengths, one integer per line");

  // train
  TrainCliOptions tr;
  auto* train_cmd = app.add_subcommand("train", "run one training experiment");
  add_train_flags(train_cmd, tr);
  train_cmd->add_option("--report-json", tr.report_json, "write report JSON");
  train_cmd->add_option("--epoch-csv", tr.epoch_csv, "write per-epoch CSV");
  train_cmd->add_option("--save-model", tr.save_model,
                        "write the restored best checkpoint");

  // sweep
  std::string sw_config, sw_out;
  int sw_threads = -1;
  auto* sweep = app.add_subcommand("sweep", "run a sweep from a JSON config");
  sweep->add_option("--config", sw_config, "sweep config JSON path")->required();
  sweep->add_option("--out", sw_out, "results CSV path")->required();
  sweep->add_option("--threads", sw_threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (generate->parsed()) {
      return cmd_generate(gen_config, gen_seed, gen_out);
    }
    if (inject->parsed()) {
      NoiseSpec spec;
      if (inj_p1 >= 0.0) {
        spec = NoiseSpec::symmetric(inj_p1, parse_noise_mode(inj_mode));
      } else if (inj_pp >= 0.0 && inj_pn >= 0.0) {
        spec = NoiseSpec{inj_pp, inj_pn, parse_noise_mode(inj_mode)};
      } else {
        throw std::invalid_argument(
            "inject: provide --p1 or both --p-pos and --p-neg");
      }
      return cmd_inject(inj_in, inj_out, inj_mask, spec, inj_seed);
    }
    if (derive->parsed()) {
      return cmd_derive_p2(dp_k1, dp_k2, dp_n, dp_history);
    }
    if (train_cmd->parsed()) {
      return cmd_train(tr);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sw_config, sw_out, sw_threads);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
