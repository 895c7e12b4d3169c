#include <doctest.h>

#include <algorithm>
#include <set>

#include "labnoise/dataset.hpp"
#include "labnoise/split.hpp"

using namespace labnoise;

namespace {

std::vector<LabeledExample> balanced_examples(int n) {
  SyntheticConfig config;
  config.n_examples = n;
  config.n_features = 4;
  RngStream rng = derive_stream(11, StreamPurpose::data_gen, 0);
  return generate_synthetic(config, rng);
}

std::multiset<std::int64_t> ids(const std::vector<LabeledExample>& v) {
  std::multiset<std::int64_t> out;
  for (const auto& ex : v) out.insert(ex.id);
  return out;
}

long positives(const std::vector<LabeledExample>& v) {
  long n = 0;
  for (const auto& ex : v) n += ex.clean_label;
  return n;
}

}  // namespace

TEST_CASE("800 examples split 70/10/20 into 560/80/160") {
  auto examples = balanced_examples(800);
  RngStream rng = derive_stream(1, StreamPurpose::shuffle, 0);
  auto split = split_dataset(examples, {0.7, 0.1, 0.2}, rng);
  CHECK(split.train.size() == 560);
  CHECK(split.validation.size() == 80);
  CHECK(split.test.size() == 160);
}

TEST_CASE("splitting is a permutation of the input ids") {
  auto examples = balanced_examples(101);
  RngStream rng = derive_stream(2, StreamPurpose::shuffle, 0);
  auto split = split_dataset(examples, {0.7, 0.1, 0.2}, rng);

  std::multiset<std::int64_t> combined = ids(split.train);
  for (auto id : ids(split.validation)) combined.insert(id);
  for (auto id : ids(split.test)) combined.insert(id);
  CHECK(combined == ids(examples));
}

TEST_CASE("split is stratified within one example per class") {
  auto examples = balanced_examples(800);  // 400 positives
  RngStream rng = derive_stream(3, StreamPurpose::shuffle, 0);
  auto split = split_dataset(examples, {0.7, 0.1, 0.2}, rng);
  CHECK(positives(split.train) == 280);
  CHECK(positives(split.validation) == 40);
  CHECK(positives(split.test) == 80);
}

TEST_CASE("same seed yields identical partitions") {
  auto examples = balanced_examples(90);
  RngStream a = derive_stream(9, StreamPurpose::shuffle, 0);
  RngStream b = derive_stream(9, StreamPurpose::shuffle, 0);
  auto s1 = split_dataset(examples, {0.7, 0.1, 0.2}, a);
  auto s2 = split_dataset(examples, {0.7, 0.1, 0.2}, b);
  REQUIRE(s1.train.size() == s2.train.size());
  for (std::size_t i = 0; i < s1.train.size(); ++i) {
    CHECK(s1.train[i].id == s2.train[i].id);
  }
  for (std::size_t i = 0; i < s1.test.size(); ++i) {
    CHECK(s1.test[i].id == s2.test[i].id);
  }
}

TEST_CASE("degenerate fractions are rejected") {
  auto examples = balanced_examples(10);
  RngStream rng = derive_stream(4, StreamPurpose::shuffle, 0);
  CHECK_THROWS_AS(split_dataset(examples, {1.0, 0.0, 0.0}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(split_dataset(examples, {0.5, 0.2, 0.2}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(split_dataset({}, {0.7, 0.1, 0.2}, rng),
                  std::invalid_argument);
}
