#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace labnoise {

struct EvalResult {
  double auc = 0.0;
  double accuracy = 0.0;
  long n_pos = 0;
  long n_neg = 0;
};

/// Rank-based (Mann-Whitney) AUC: the fraction of (positive, negative) pairs
/// where the positive outranks the negative, ties counting one half. Needs
/// at least one example of each class.
template <typename Scalar>
double auc_roc(const Eigen::VectorX<Scalar>& scores,
               const Eigen::VectorXi& labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("auc_roc: length mismatch");
  }
  const long n = scores.size();
  long n_pos = 0;
  for (long i = 0; i < n; ++i) {
    if (!std::isfinite(static_cast<double>(scores[i]))) {
      throw std::invalid_argument("auc_roc: scores must be finite");
    }
    n_pos += labels[i] == 1 ? 1 : 0;
  }
  const long n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw std::invalid_argument("auc_roc: AUC undefined for single-class input");
  }

  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0L);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return scores[a] < scores[b]; });

  // Average ranks over tie groups, then the Mann-Whitney U statistic.
  double rank_sum_pos = 0.0;
  long i = 0;
  while (i < n) {
    long j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;  // 1-based
    for (long k = i; k <= j; ++k) {
      if (labels[order[k]] == 1) rank_sum_pos += avg_rank;
    }
    i = j + 1;
  }
  double u = rank_sum_pos - 0.5 * static_cast<double>(n_pos) *
                                static_cast<double>(n_pos + 1);
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

/// Fraction of examples where (score >= threshold) agrees with the label.
template <typename Scalar>
double accuracy(const Eigen::VectorX<Scalar>& scores,
                const Eigen::VectorXi& labels, double threshold = 0.5) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("accuracy: length mismatch");
  }
  if (scores.size() == 0) {
    throw std::invalid_argument("accuracy: empty input");
  }
  long correct = 0;
  for (long i = 0; i < scores.size(); ++i) {
    int predicted = static_cast<double>(scores[i]) >= threshold ? 1 : 0;
    if (predicted == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(scores.size());
}

}  // namespace labnoise
