#include "labnoise/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace labnoise {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) +
                             ": not a number: '" + field + "'");
  }
  return v;
}

int parse_binary(const std::string& field, std::size_t line_no,
                 const char* column) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw std::runtime_error("csv line " + std::to_string(line_no) + ": " +
                           column + " must be 0 or 1, got '" + field + "'");
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::vector<LabeledExample> generate_synthetic(const SyntheticConfig& config,
                                               RngStream& rng) {
  if (config.n_examples < 10) {
    throw std::invalid_argument("generate_synthetic: need at least 10 examples");
  }
  if (config.n_features < 1) {
    throw std::invalid_argument("generate_synthetic: need at least 1 feature");
  }
  if (config.class_separation < 0.0) {
    throw std::invalid_argument("generate_synthetic: separation must be >= 0");
  }
  if (!(config.positive_fraction > 0.0 && config.positive_fraction < 1.0)) {
    throw std::invalid_argument(
        "generate_synthetic: positive_fraction must lie in (0, 1)");
  }

  auto n = static_cast<std::size_t>(config.n_examples);
  auto n_pos = static_cast<std::size_t>(
      std::llround(config.positive_fraction * config.n_examples));
  std::vector<int> labels(n, 0);
  std::fill(labels.begin(), labels.begin() + static_cast<long>(n_pos), 1);
  rng.shuffle(labels);

  const double offset = config.class_separation / 2.0;
  std::vector<LabeledExample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& ex = out[i];
    ex.id = static_cast<std::int64_t>(i);
    ex.clean_label = labels[i];
    ex.stored_label = labels[i];
    ex.prior_corrupted = false;
    ex.features.resize(config.n_features);
    for (int j = 0; j < config.n_features; ++j) {
      ex.features[j] = rng.normal();
    }
    ex.features[0] += labels[i] == 1 ? offset : -offset;
  }
  return out;
}

std::vector<LabeledExample> load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open csv file: " + path);
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("csv file is empty: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  auto header = split_fields(line);
  int col_label = -1, col_clean = -1, col_corrupted = -1;
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const auto& name = header[c];
    if (name == "label") {
      col_label = static_cast<int>(c);
    } else if (name == "clean_label") {
      col_clean = static_cast<int>(c);
    } else if (name == "prior_corrupted") {
      col_corrupted = static_cast<int>(c);
    } else if (name != "id") {
      feature_cols.push_back(c);
    }
  }
  if (col_label < 0) {
    throw std::runtime_error("csv header has no 'label' column: " + path);
  }
  if ((col_clean < 0) != (col_corrupted < 0)) {
    throw std::runtime_error(
        "csv header must carry both clean_label and prior_corrupted or neither: " +
        path);
  }

  std::vector<LabeledExample> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("csv line " + std::to_string(line_no) +
                               ": expected " + std::to_string(header.size()) +
                               " fields, got " + std::to_string(fields.size()));
    }
    LabeledExample ex;
    ex.id = static_cast<std::int64_t>(out.size());
    ex.stored_label = parse_binary(fields[col_label], line_no, "label");
    if (col_clean >= 0) {
      ex.clean_label = parse_binary(fields[col_clean], line_no, "clean_label");
      ex.prior_corrupted =
          parse_binary(fields[col_corrupted], line_no, "prior_corrupted") == 1;
      if (!ex.consistent()) {
        throw std::runtime_error("csv line " + std::to_string(line_no) +
                                 ": prior_corrupted flag inconsistent with labels");
      }
    } else {
      ex.clean_label = ex.stored_label;
      ex.prior_corrupted = false;
    }
    ex.features.resize(static_cast<long>(feature_cols.size()));
    for (std::size_t j = 0; j < feature_cols.size(); ++j) {
      ex.features[static_cast<long>(j)] = parse_double(fields[feature_cols[j]], line_no);
    }
    out.push_back(std::move(ex));
  }
  return out;
}

void write_csv(const std::vector<LabeledExample>& examples,
               const std::string& path, bool with_corruption_columns) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write csv file: " + path);
  }

  long n_features = examples.empty() ? 0 : examples.front().features.size();
  out << "id,label";
  for (long j = 0; j < n_features; ++j) out << ",f" << j;
  if (with_corruption_columns) out << ",clean_label,prior_corrupted";
  out << "\n";

  std::vector<const LabeledExample*> ordered;
  ordered.reserve(examples.size());
  for (const auto& ex : examples) ordered.push_back(&ex);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  for (const auto* ex : ordered) {
    out << ex->id << ',' << ex->stored_label;
    for (long j = 0; j < ex->features.size(); ++j) {
      out << ',' << format_double(ex->features[j]);
    }
    if (with_corruption_columns) {
      out << ',' << ex->clean_label << ',' << (ex->prior_corrupted ? 1 : 0);
    }
    out << "\n";
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace labnoise
