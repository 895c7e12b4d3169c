#include "labnoise/report_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace labnoise {

namespace {

using nlohmann::json;

const char* kind_name(ModelKind kind) {
  return kind == ModelKind::logistic ? "logistic" : "mlp";
}

const char* mode_name(NoiseMode mode) {
  return mode == NoiseMode::bernoulli ? "bernoulli" : "exact_count";
}

json config_to_json(const TrainConfig& c) {
  json j;
  j["model"] = {{"kind", kind_name(c.model_spec.kind)},
                {"n_features", c.model_spec.n_features},
                {"hidden_units", c.model_spec.hidden_units},
                {"init_scale", c.model_spec.init_scale}};
  j["optimizer"] = {{"learning_rate", c.optimizer.learning_rate},
                    {"beta1", c.optimizer.beta1},
                    {"beta2", c.optimizer.beta2},
                    {"epsilon", c.optimizer.epsilon}};
  j["batch_size"] = c.batch_size;
  j["patience"] = c.patience;
  j["max_epochs"] = c.max_epochs;
  j["noise"] = {{"p_pos", c.noise.p_pos},
                {"p_neg", c.noise.p_neg},
                {"mode", mode_name(c.noise.mode)}};
  j["attack"] = {{"p2", c.attack.p2}};
  j["master_seed"] = c.master_seed;
  if (c.synthetic.has_value() && c.csv_path.empty()) {
    j["dataset"] = {{"source", "synthetic"},
                    {"n_examples", c.synthetic->n_examples},
                    {"n_features", c.synthetic->n_features},
                    {"class_separation", c.synthetic->class_separation},
                    {"positive_fraction", c.synthetic->positive_fraction}};
  } else {
    j["dataset"] = {{"source", "csv"}, {"path", c.csv_path}};
  }
  j["split_fractions"] = c.split_fractions;
  j["corrupt_validation"] = c.corrupt_validation;
  return j;
}

json scenario_to_json(const ScenarioCounts& s) {
  return {{"n_cl_given_cl", s.n_cl_given_cl},
          {"n_cl_given_co", s.n_cl_given_co},
          {"n_co_given_cl", s.n_co_given_cl},
          {"n_co_given_co", s.n_co_given_co}};
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string report_to_json(const TrainReport& report) {
  json j;
  j["config"] = config_to_json(report.config);
  j["split_sizes"] = {{"train", report.n_train},
                      {"validation", report.n_validation},
                      {"test", report.n_test}};
  j["best_epoch"] = report.best_epoch;
  j["stopped_epoch"] = report.stopped_epoch;
  j["n_actual"] = report.n_actual;
  j["best_val_accuracy"] = report.best_val_accuracy;
  j["test_auc"] = report.test_auc;
  j["test_accuracy"] = report.test_accuracy;
  j["epochs"] = json::array();
  for (const auto& e : report.epochs) {
    j["epochs"].push_back({{"epoch", e.epoch},
                           {"train_loss", e.train_loss},
                           {"val_accuracy", e.val_accuracy},
                           {"scenarios", scenario_to_json(e.scenarios)}});
  }
  return j.dump(2) + "\n";
}

void write_report_json(const TrainReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write report: " + path);
  }
  out << report_to_json(report);
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

void write_epoch_csv(const TrainReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write epoch csv: " + path);
  }
  out << "epoch,train_loss,val_accuracy,n_cl_given_cl,n_cl_given_co,"
         "n_co_given_cl,n_co_given_co\n";
  for (const auto& e : report.epochs) {
    out << e.epoch << ',' << format_double(e.train_loss) << ','
        << format_double(e.val_accuracy) << ',' << e.scenarios.n_cl_given_cl
        << ',' << e.scenarios.n_cl_given_co << ',' << e.scenarios.n_co_given_cl
        << ',' << e.scenarios.n_co_given_co << "\n";
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace labnoise
