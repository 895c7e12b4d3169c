#include "labnoise/model_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace labnoise {

namespace {

const char* kind_name(ModelKind kind) {
  return kind == ModelKind::logistic ? "logistic" : "mlp";
}

ModelKind parse_kind(const std::string& name) {
  if (name == "logistic") return ModelKind::logistic;
  if (name == "mlp") return ModelKind::mlp;
  throw std::runtime_error("checkpoint: unknown model kind '" + name + "'");
}

}  // namespace

void save_checkpoint(const std::string& path, const ModelSpec& spec,
                     const ModelState<double>& state) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write checkpoint: " + path);
  }
  out << "labnoise-checkpoint v1\n";
  out << "kind " << kind_name(spec.kind) << "\n";
  out << "n_features " << spec.n_features << "\n";
  out << "hidden_units " << spec.hidden_units << "\n";
  out << "params " << state.params.size() << "\n";
  char buf[32];
  for (long i = 0; i < state.params.size(); ++i) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), state.params[i]);
    out.write(buf, ptr - buf);
    out << "\n";
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::pair<ModelSpec, ModelState<double>> load_checkpoint(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open checkpoint: " + path);
  }
  std::string magic, version;
  in >> magic >> version;
  if (magic != "labnoise-checkpoint" || version != "v1") {
    throw std::runtime_error("not a labnoise checkpoint: " + path);
  }

  ModelSpec spec;
  long n_params = -1;
  std::string key;
  while (in >> key) {
    if (key == "kind") {
      std::string value;
      in >> value;
      spec.kind = parse_kind(value);
    } else if (key == "n_features") {
      in >> spec.n_features;
    } else if (key == "hidden_units") {
      in >> spec.hidden_units;
    } else if (key == "params") {
      in >> n_params;
      break;
    } else {
      throw std::runtime_error("checkpoint: unexpected header key '" + key + "'");
    }
  }
  if (!in || n_params < 0) {
    throw std::runtime_error("checkpoint: truncated header: " + path);
  }
  if (n_params != param_count(spec)) {
    throw std::runtime_error("checkpoint: parameter count does not match spec");
  }

  ModelState<double> state;
  state.params.resize(n_params);
  for (long i = 0; i < n_params; ++i) {
    if (!(in >> state.params[i])) {
      throw std::runtime_error("checkpoint: truncated parameters: " + path);
    }
  }
  return {spec, std::move(state)};
}

}  // namespace labnoise
