#include <doctest.h>

#include <cmath>

#include "labnoise/dataset.hpp"
#include "labnoise/noise.hpp"

using namespace labnoise;

namespace {

std::vector<LabeledExample> clean_examples(int n, std::uint64_t seed = 5) {
  SyntheticConfig config;
  config.n_examples = n;
  config.n_features = 2;
  RngStream rng = derive_stream(seed, StreamPurpose::data_gen, 0);
  return generate_synthetic(config, rng);
}

}  // namespace

TEST_CASE("zero probability injects nothing") {
  auto examples = clean_examples(100);
  RngStream rng = derive_stream(1, StreamPurpose::prior_noise, 0);
  auto out = inject_prior_noise(examples, NoiseSpec::symmetric(0.0), rng);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].stored_label == examples[i].stored_label);
    CHECK_FALSE(out[i].prior_corrupted);
  }
}

TEST_CASE("probability one flips every label") {
  auto examples = clean_examples(100);
  RngStream rng = derive_stream(1, StreamPurpose::prior_noise, 0);
  auto out = inject_prior_noise(examples, NoiseSpec::symmetric(1.0), rng);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].stored_label == 1 - examples[i].clean_label);
    CHECK(out[i].clean_label == examples[i].clean_label);
    CHECK(out[i].prior_corrupted);
    CHECK(out[i].consistent());
  }
}

TEST_CASE("exact_count mode flips exactly round(p * class size) per class") {
  auto examples = clean_examples(560);  // 280 per class
  RngStream rng = derive_stream(2, StreamPurpose::prior_noise, 0);
  auto out = inject_prior_noise(
      examples, NoiseSpec::symmetric(0.3, NoiseMode::exact_count), rng);
  long pos_flips = 0, neg_flips = 0;
  for (const auto& ex : out) {
    if (!ex.prior_corrupted) continue;
    (ex.clean_label == 1 ? pos_flips : neg_flips) += 1;
  }
  CHECK(pos_flips == 84);  // round(0.3 * 280)
  CHECK(neg_flips == 84);
}

TEST_CASE("asymmetric class rates apply to the right classes") {
  auto examples = clean_examples(400);
  RngStream rng = derive_stream(3, StreamPurpose::prior_noise, 0);
  auto out = inject_prior_noise(
      examples, NoiseSpec{1.0, 0.0, NoiseMode::bernoulli}, rng);
  for (const auto& ex : out) {
    CHECK(ex.prior_corrupted == (ex.clean_label == 1));
  }
}

TEST_CASE("already-corrupted input is rejected") {
  auto examples = clean_examples(20);
  RngStream rng = derive_stream(4, StreamPurpose::prior_noise, 0);
  auto corrupted = inject_prior_noise(examples, NoiseSpec::symmetric(1.0), rng);
  CHECK_THROWS_AS(inject_prior_noise(corrupted, NoiseSpec::symmetric(0.1), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      inject_prior_noise(examples, NoiseSpec::symmetric(1.5), rng),
      std::invalid_argument);
}

TEST_CASE("epoch attack identity and inversion extremes") {
  std::vector<int> stored{0, 1, 1, 0, 1};
  RngStream rng = derive_stream(5, StreamPurpose::epoch_attack, 1);
  auto [same, mask0] = epoch_attack_labels(stored, {0.0}, rng);
  CHECK(same == stored);
  for (bool f : mask0) CHECK_FALSE(f);

  RngStream rng2 = derive_stream(5, StreamPurpose::epoch_attack, 2);
  auto [flipped, mask1] = epoch_attack_labels(stored, {1.0}, rng2);
  for (std::size_t i = 0; i < stored.size(); ++i) {
    CHECK(flipped[i] == 1 - stored[i]);
    CHECK(mask1[i]);
  }
}

TEST_CASE("epoch attack flip fraction concentrates around p2") {
  std::vector<int> stored(10000, 1);
  RngStream rng = derive_stream(6, StreamPurpose::epoch_attack, 1);
  auto [labels, mask] = epoch_attack_labels(stored, {0.25}, rng);
  long flips = 0;
  for (bool f : mask) flips += f ? 1 : 0;
  double fraction = static_cast<double>(flips) / 10000.0;
  CHECK(std::abs(fraction - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / 10000.0));
}

TEST_CASE("applying the flip mask twice recovers the stored labels") {
  std::vector<int> stored{1, 0, 0, 1, 1, 0, 1};
  RngStream rng = derive_stream(7, StreamPurpose::epoch_attack, 1);
  auto [labels, mask] = epoch_attack_labels(stored, {0.5}, rng);
  for (std::size_t i = 0; i < stored.size(); ++i) {
    int twice = mask[i] ? 1 - labels[i] : labels[i];
    CHECK(twice == stored[i]);
  }
}

TEST_CASE("scenario probabilities reproduce the p1=0.2, p2=0.25 table") {
  ScenarioProbabilities s = scenario_probabilities(0.2, 0.25);
  CHECK(s.p_cl_given_cl == doctest::Approx(0.60).epsilon(1e-12));
  CHECK(s.p_cl_given_co == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(s.p_co_given_cl == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(s.p_co_given_co == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(s.p_clean == doctest::Approx(0.65).epsilon(1e-12));
  CHECK(s.p_corrupt == doctest::Approx(0.35).epsilon(1e-12));
}

TEST_CASE("scenario probability edge values") {
  CHECK(scenario_probabilities(0.0, 0.0).p_clean == 1.0);
  CHECK(scenario_probabilities(0.5, 0.33).p_clean ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(scenario_probabilities(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(scenario_probabilities(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("scenario probabilities always sum to one") {
  for (double p1 : {0.0, 0.13, 0.5, 0.99}) {
    for (double p2 : {0.0, 0.25, 0.61, 1.0}) {
      ScenarioProbabilities s = scenario_probabilities(p1, p2);
      CHECK(s.p_clean + s.p_corrupt == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("classify_scenarios buckets the four combinations") {
  std::vector<bool> prior{false, false, true, true};
  std::vector<bool> flip{false, true, false, true};
  ScenarioCounts c = classify_scenarios(prior, flip);
  CHECK(c.n_cl_given_cl == 1);
  CHECK(c.n_co_given_cl == 1);
  CHECK(c.n_co_given_co == 1);
  CHECK(c.n_cl_given_co == 1);
  CHECK(c.total() == 4);

  CHECK_THROWS_AS(classify_scenarios({true}, {true, false}),
                  std::invalid_argument);
}

TEST_CASE("all corruption undone when every label flips") {
  std::vector<bool> prior(10, true);
  std::vector<bool> flip(10, true);
  ScenarioCounts c = classify_scenarios(prior, flip);
  CHECK(c.n_cl_given_co == 10);
  CHECK(c.n_cl_given_cl + c.n_co_given_cl + c.n_co_given_co == 0);
}

TEST_CASE("empirical scenario fractions match the analytic products") {
  const int n = 100000;
  const double p1 = 0.2, p2 = 0.25;
  RngStream prior_rng = derive_stream(8, StreamPurpose::prior_noise, 0);
  std::vector<bool> prior(n);
  for (int i = 0; i < n; ++i) prior[i] = prior_rng.bernoulli(p1);

  std::vector<int> stored(n, 0);
  RngStream attack_rng = derive_stream(8, StreamPurpose::epoch_attack, 1);
  auto [labels, mask] = epoch_attack_labels(stored, {p2}, attack_rng);

  ScenarioCounts counts = classify_scenarios(prior, mask);
  ScenarioProbabilities expected = scenario_probabilities(p1, p2);
  auto check_cell = [&](long long count, double q) {
    double fraction = static_cast<double>(count) / n;
    double sigma = std::sqrt(q * (1.0 - q) / n);
    CHECK(std::abs(fraction - q) < 3.0 * sigma);
  };
  check_cell(counts.n_cl_given_cl, expected.p_cl_given_cl);
  check_cell(counts.n_cl_given_co, expected.p_cl_given_co);
  check_cell(counts.n_co_given_cl, expected.p_co_given_cl);
  check_cell(counts.n_co_given_co, expected.p_co_given_co);
}
