#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "labnoise/dataset.hpp"
#include "labnoise/noise.hpp"

using namespace labnoise;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("synthetic generation hits the configured class counts") {
  SyntheticConfig config;  // 800 examples, half positive
  RngStream rng = derive_stream(1, StreamPurpose::data_gen, 0);
  auto examples = generate_synthetic(config, rng);
  REQUIRE(examples.size() == 800);
  long pos = 0;
  for (const auto& ex : examples) {
    pos += ex.clean_label;
    CHECK(ex.stored_label == ex.clean_label);
    CHECK_FALSE(ex.prior_corrupted);
    CHECK(ex.features.size() == config.n_features);
  }
  CHECK(pos == 400);
}

TEST_CASE("synthetic generation is deterministic in (config, seed)") {
  SyntheticConfig config;
  config.n_examples = 50;
  RngStream a = derive_stream(3, StreamPurpose::data_gen, 0);
  RngStream b = derive_stream(3, StreamPurpose::data_gen, 0);
  auto e1 = generate_synthetic(config, a);
  auto e2 = generate_synthetic(config, b);
  for (std::size_t i = 0; i < e1.size(); ++i) {
    CHECK(e1[i].clean_label == e2[i].clean_label);
    CHECK(e1[i].features == e2[i].features);
  }
}

TEST_CASE("class means land at the configured offsets") {
  SyntheticConfig config;
  config.n_examples = 100000;
  config.n_features = 3;
  config.class_separation = 2.0;
  RngStream rng = derive_stream(4, StreamPurpose::data_gen, 0);
  auto examples = generate_synthetic(config, rng);

  Eigen::Vector3d pos_sum = Eigen::Vector3d::Zero();
  long n_pos = 0;
  for (const auto& ex : examples) {
    if (ex.clean_label == 1) {
      pos_sum += ex.features;
      ++n_pos;
    }
  }
  Eigen::Vector3d mean = pos_sum / static_cast<double>(n_pos);
  double tol = 3.0 / std::sqrt(static_cast<double>(n_pos));
  CHECK(std::abs(mean[0] - 1.0) < tol);  // +separation/2 on feature 0
  CHECK(std::abs(mean[1]) < tol);
  CHECK(std::abs(mean[2]) < tol);
}

TEST_CASE("config validation") {
  RngStream rng = derive_stream(5, StreamPurpose::data_gen, 0);
  SyntheticConfig too_small;
  too_small.n_examples = 5;
  CHECK_THROWS_AS(generate_synthetic(too_small, rng), std::invalid_argument);
  SyntheticConfig no_features;
  no_features.n_features = 0;
  CHECK_THROWS_AS(generate_synthetic(no_features, rng), std::invalid_argument);
  SyntheticConfig bad_fraction;
  bad_fraction.positive_fraction = 1.0;
  CHECK_THROWS_AS(generate_synthetic(bad_fraction, rng), std::invalid_argument);
}

TEST_CASE("csv round-trip preserves every field") {
  SyntheticConfig config;
  config.n_examples = 40;
  config.n_features = 5;
  RngStream rng = derive_stream(6, StreamPurpose::data_gen, 0);
  auto examples = generate_synthetic(config, rng);
  RngStream noise_rng = derive_stream(6, StreamPurpose::prior_noise, 0);
  auto corrupted =
      inject_prior_noise(examples, NoiseSpec::symmetric(0.4), noise_rng);

  TempFile file("labnoise_roundtrip.csv");
  write_csv(corrupted, file.path, /*with_corruption_columns=*/true);
  auto reloaded = load_csv(file.path);

  REQUIRE(reloaded.size() == corrupted.size());
  for (std::size_t i = 0; i < corrupted.size(); ++i) {
    CHECK(reloaded[i].id == corrupted[i].id);
    CHECK(reloaded[i].stored_label == corrupted[i].stored_label);
    CHECK(reloaded[i].clean_label == corrupted[i].clean_label);
    CHECK(reloaded[i].prior_corrupted == corrupted[i].prior_corrupted);
    CHECK(reloaded[i].features == corrupted[i].features);  // bit-exact
  }
}

TEST_CASE("plain csv loads with stored == clean") {
  TempFile file("labnoise_plain.csv");
  {
    std::ofstream out(file.path);
    out << "id,label,f0,f1\n0,1,0.25,-1.5\n1,0,3.5,2.25\n2,1,0,0\n";
  }
  auto examples = load_csv(file.path);
  REQUIRE(examples.size() == 3);
  CHECK(examples[0].stored_label == 1);
  CHECK(examples[0].clean_label == 1);
  CHECK(examples[0].features[0] == 0.25);
  CHECK(examples[0].features[1] == -1.5);
  CHECK(examples[2].id == 2);
}

TEST_CASE("csv errors name the offending line") {
  TempFile file("labnoise_bad.csv");

  SUBCASE("non-binary label") {
    {
      std::ofstream out(file.path);
      out << "id,label,f0\n0,1,0.5\n1,0,0.5\n2,1,0.5\n3,0,0.5\n4,2,0.5\n";
    }
    CHECK_THROWS_WITH_AS(load_csv(file.path),
                         doctest::Contains("line 6"), std::runtime_error);
  }

  SUBCASE("inconsistent column count") {
    {
      std::ofstream out(file.path);
      out << "id,label,f0,f1\n0,1,0.5,0.5\n1,0,0.5\n";
    }
    CHECK_THROWS_WITH_AS(load_csv(file.path),
                         doctest::Contains("line 3"), std::runtime_error);
  }

  SUBCASE("unparseable number") {
    {
      std::ofstream out(file.path);
      out << "id,label,f0\n0,1,abc\n";
    }
    CHECK_THROWS_WITH_AS(load_csv(file.path),
                         doctest::Contains("line 2"), std::runtime_error);
  }

  SUBCASE("missing label column") {
    {
      std::ofstream out(file.path);
      out << "id,f0\n0,0.5\n";
    }
    CHECK_THROWS_AS(load_csv(file.path), std::runtime_error);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_csv("/nonexistent/nowhere.csv"), std::runtime_error);
  }
}

TEST_CASE("empty example list writes a header-only file") {
  TempFile file("labnoise_empty.csv");
  write_csv({}, file.path);
  std::ifstream in(file.path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "id,label");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("800 examples produce 801 lines") {
  SyntheticConfig config;
  RngStream rng = derive_stream(7, StreamPurpose::data_gen, 0);
  auto examples = generate_synthetic(config, rng);
  TempFile file("labnoise_800.csv");
  write_csv(examples, file.path);
  std::ifstream in(file.path);
  long lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 801);
}
