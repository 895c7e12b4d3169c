#include <doctest.h>

#include <vector>

#include "labnoise/metrics.hpp"
#include "labnoise/rng.hpp"
#include "oracles.hpp"

using namespace labnoise;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<long>(values.size()));
  long i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

Eigen::VectorXi labels(std::initializer_list<int> values) {
  Eigen::VectorXi v(static_cast<long>(values.size()));
  long i = 0;
  for (int x : values) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("perfectly separated scores give AUC one, inverted give zero") {
  CHECK(auc_roc<double>(vec({0.1, 0.2, 0.8, 0.9}), labels({0, 0, 1, 1})) == 1.0);
  CHECK(auc_roc<double>(vec({0.9, 0.8, 0.2, 0.1}), labels({0, 0, 1, 1})) == 0.0);
}

TEST_CASE("four-example hand value") {
  // Pairs: (0.35 vs 0.1) win, (0.35 vs 0.4) loss, (0.8 vs 0.1) win,
  // (0.8 vs 0.4) win -> 3/4.
  CHECK(auc_roc<double>(vec({0.1, 0.4, 0.35, 0.8}), labels({0, 0, 1, 1})) ==
        0.75);
}

TEST_CASE("constant scores give AUC one half by the tie convention") {
  CHECK(auc_roc<double>(vec({0.5, 0.5, 0.5, 0.5}), labels({0, 1, 0, 1})) == 0.5);
}

TEST_CASE("single-class input is an explicit error") {
  CHECK_THROWS_AS(auc_roc<double>(vec({0.1, 0.2}), labels({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(auc_roc<double>(vec({0.1, 0.2}), labels({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("rank-based AUC equals the pairwise oracle on random instances") {
  RngStream rng = derive_stream(77, StreamPurpose::data_gen, 0);
  for (int instance = 0; instance < 1000; ++instance) {
    long n = 2 + static_cast<long>(rng.uniform_below(49));
    std::vector<double> scores(n);
    std::vector<int> y(n);
    bool has_pos = false, has_neg = false;
    for (long i = 0; i < n; ++i) {
      // Coarse grid so ties actually occur.
      scores[i] = static_cast<double>(rng.uniform_below(8)) / 8.0;
      y[i] = rng.bernoulli(0.5) ? 1 : 0;
      (y[i] == 1 ? has_pos : has_neg) = true;
    }
    if (!has_pos) y[0] = 1;
    if (!has_neg) y[static_cast<std::size_t>(n - 1)] = 0;

    Eigen::VectorXd s = Eigen::Map<Eigen::VectorXd>(scores.data(), n);
    Eigen::VectorXi l(n);
    for (long i = 0; i < n; ++i) l[i] = y[static_cast<std::size_t>(i)];
    CHECK(auc_roc<double>(s, l) == oracle::pairwise_auc(scores, y));
  }
}

TEST_CASE("AUC is invariant under strictly monotone score transformations") {
  Eigen::VectorXd s = vec({0.1, 0.4, 0.35, 0.8, 0.2, 0.7});
  Eigen::VectorXi l = labels({0, 0, 1, 1, 0, 1});
  double base = auc_roc<double>(s, l);
  Eigen::VectorXd scaled = 100.0 * s;
  Eigen::VectorXd exped = s.array().exp().matrix();
  CHECK(auc_roc<double>(scaled, l) == base);
  CHECK(auc_roc<double>(exped, l) == base);
}

TEST_CASE("negating tie-free scores complements the AUC") {
  Eigen::VectorXd s = vec({0.11, 0.42, 0.35, 0.81, 0.27, 0.73});
  Eigen::VectorXi l = labels({0, 1, 0, 1, 1, 0});
  Eigen::VectorXd neg = -s;
  CHECK(auc_roc<double>(s, l) + auc_roc<double>(neg, l) == 1.0);
}

TEST_CASE("accuracy hand values and threshold boundary") {
  CHECK(accuracy<double>(vec({0.9, 0.9, 0.9}), labels({1, 1, 1})) == 1.0);
  CHECK(accuracy<double>(vec({0.9, 0.9, 0.9}), labels({0, 0, 0})) == 0.0);
  // 0.5 >= threshold counts as a positive prediction.
  CHECK(accuracy<double>(vec({0.6, 0.4, 0.5}), labels({1, 0, 0})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(accuracy<double>(Eigen::VectorXd(), Eigen::VectorXi()),
                  std::invalid_argument);
}
