#include "labnoise/trainer.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "labnoise/split.hpp"

namespace labnoise {

namespace {

Eigen::MatrixXd feature_matrix(const std::vector<LabeledExample>& split) {
  if (split.empty()) {
    throw std::invalid_argument("trainer: empty split");
  }
  const long d = split.front().features.size();
  Eigen::MatrixXd x(static_cast<long>(split.size()), d);
  for (std::size_t i = 0; i < split.size(); ++i) {
    if (split[i].features.size() != d) {
      throw std::invalid_argument("trainer: inconsistent feature dimensions");
    }
    x.row(static_cast<long>(i)) = split[i].features.transpose();
  }
  return x;
}

Eigen::VectorXi clean_labels(const std::vector<LabeledExample>& split) {
  Eigen::VectorXi y(static_cast<long>(split.size()));
  for (std::size_t i = 0; i < split.size(); ++i) {
    y[static_cast<long>(i)] = split[i].clean_label;
  }
  return y;
}

std::vector<LabeledExample> make_dataset(const TrainConfig& config) {
  if (!config.csv_path.empty()) {
    return load_csv(config.csv_path);
  }
  if (!config.synthetic.has_value()) {
    throw std::invalid_argument("train: no dataset source configured");
  }
  RngStream rng =
      derive_stream(config.master_seed, StreamPurpose::data_gen, 0);
  return generate_synthetic(*config.synthetic, rng);
}

}  // namespace

TrainReport train(const TrainConfig& config) {
  ModelState<double> unused;
  return train(config, unused);
}

TrainReport train(const TrainConfig& config, ModelState<double>& final_model) {
  if (config.batch_size < 1) {
    throw std::invalid_argument("train: batch_size must be >= 1");
  }
  if (config.max_epochs < 1) {
    throw std::invalid_argument("train: max_epochs must be >= 1");
  }

  // (1) Dataset with stored == clean, (2) stratified split.
  auto dataset = make_dataset(config);
  RngStream split_rng =
      derive_stream(config.master_seed, StreamPurpose::shuffle, 0);
  DatasetSplit split =
      split_dataset(dataset, config.split_fractions, split_rng);

  // (3) Prior corruption on the train split only. Validation/test labels
  // never pass through the noise path (the ablation flag below corrupts
  // validation via its own stream and is off by default).
  RngStream prior_rng =
      derive_stream(config.master_seed, StreamPurpose::prior_noise, 0);
  std::vector<LabeledExample> train_split =
      inject_prior_noise(split.train, config.noise, prior_rng);

  std::vector<LabeledExample> val_split = split.validation;
  if (config.corrupt_validation) {
    RngStream val_rng =
        derive_stream(config.master_seed, StreamPurpose::prior_noise, 1);
    val_split = inject_prior_noise(val_split, config.noise, val_rng);
  }

  const Eigen::MatrixXd x_train = feature_matrix(train_split);
  const Eigen::MatrixXd x_val = feature_matrix(val_split);

  std::vector<int> stored(train_split.size());
  std::vector<bool> prior_mask(train_split.size());
  for (std::size_t i = 0; i < train_split.size(); ++i) {
    stored[i] = train_split[i].stored_label;
    prior_mask[i] = train_split[i].prior_corrupted;
  }
  Eigen::VectorXi y_val(static_cast<long>(val_split.size()));
  for (std::size_t i = 0; i < val_split.size(); ++i) {
    y_val[static_cast<long>(i)] = val_split[i].stored_label;
  }

  ModelSpec model_spec = config.model_spec;
  model_spec.n_features = static_cast<int>(x_train.cols());
  RngStream init_rng =
      derive_stream(config.master_seed, StreamPurpose::init, 0);
  ModelState<double> model = init_model<double>(model_spec, init_rng);
  OptimizerState<double> opt =
      OptimizerState<double>::zeros(model.params.size());

  EarlyStopState<double> stopper;
  stopper.patience = config.patience;
  stopper.max_epochs = config.max_epochs;

  TrainReport report;
  report.config = config;
  report.config.model_spec = model_spec;
  report.n_train = static_cast<long>(train_split.size());
  report.n_validation = static_cast<long>(val_split.size());
  report.n_test = static_cast<long>(split.test.size());

  const long n_train = x_train.rows();
  std::vector<long> order(static_cast<std::size_t>(n_train));

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    // (4) Transient attack on the stored labels, fresh stream per epoch.
    RngStream attack_rng = derive_stream(
        config.master_seed, StreamPurpose::epoch_attack,
        static_cast<std::uint64_t>(epoch));
    auto [epoch_labels, flip_mask] =
        epoch_attack_labels(stored, config.attack, attack_rng);
    ScenarioCounts scenarios = classify_scenarios(prior_mask, flip_mask);

    RngStream shuffle_rng = derive_stream(
        config.master_seed, StreamPurpose::shuffle,
        static_cast<std::uint64_t>(epoch));
    std::iota(order.begin(), order.end(), 0L);
    shuffle_rng.shuffle(order);

    double loss_sum = 0.0;
    for (long start = 0; start < n_train; start += config.batch_size) {
      const long b = std::min<long>(config.batch_size, n_train - start);
      Eigen::MatrixXd xb(b, x_train.cols());
      Eigen::VectorXd yb(b);
      for (long r = 0; r < b; ++r) {
        long src = order[static_cast<std::size_t>(start + r)];
        xb.row(r) = x_train.row(src);
        yb[r] = static_cast<double>(epoch_labels[static_cast<std::size_t>(src)]);
      }
      Eigen::VectorXd probs = forward(model_spec, model, xb);
      double batch_loss = bce_loss<double>(probs, yb);
      if (!std::isfinite(batch_loss)) {
        throw std::runtime_error("train: non-finite loss at epoch " +
                                 std::to_string(epoch));
      }
      loss_sum += batch_loss * static_cast<double>(b);
      Eigen::VectorXd grad = backward(model_spec, model, xb, yb);
      adam_step(model.params, opt, grad, config.optimizer);
    }

    // (5) Validation accuracy on clean labels (threshold 0.5).
    Eigen::VectorXd val_scores = forward(model_spec, model, x_val);
    double val_acc = accuracy<double>(val_scores, y_val);

    report.epochs.push_back(
        EpochRecord{epoch, loss_sum / static_cast<double>(n_train), val_acc,
                    scenarios});

    // (6) Early stopping with best-epoch restore.
    StopDecision decision = early_stop_update(stopper, epoch, val_acc, model);
    if (decision == StopDecision::stop) {
      report.stopped_epoch = epoch;
      break;
    }
  }

  model = stopper.best_checkpoint;
  report.best_epoch = stopper.best_epoch;
  report.best_val_accuracy = stopper.best_metric;
  report.n_actual = report.stopped_epoch;

  // (7) Clean-test evaluation.
  EvalResult test = evaluate_checkpoint(model_spec, model, split.test);
  report.test_auc = test.auc;
  report.test_accuracy = test.accuracy;

  final_model = std::move(model);
  return report;
}

EvalResult evaluate_checkpoint(const ModelSpec& spec,
                               const ModelState<double>& model,
                               const std::vector<LabeledExample>& split) {
  const Eigen::MatrixXd x = feature_matrix(split);
  const Eigen::VectorXi y = clean_labels(split);
  Eigen::VectorXd scores = forward(spec, model, x);
  EvalResult result;
  result.auc = auc_roc<double>(scores, y);
  result.accuracy = accuracy<double>(scores, y);
  result.n_pos = (y.array() == 1).count();
  result.n_neg = y.size() - result.n_pos;
  return result;
}

}  // namespace labnoise
