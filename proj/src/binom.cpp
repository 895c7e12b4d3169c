#include "labnoise/binom.hpp"

#include <cmath>
#include <stdexcept>

namespace labnoise {

namespace {

void validate(const BinomialParams& params) {
  if (params.n < 1) {
    throw std::invalid_argument("binomial: n must be >= 1");
  }
  if (params.k < 0 || params.k > params.n) {
    throw std::invalid_argument("binomial: k must satisfy 0 <= k <= n");
  }
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("binomial: p must lie in [0, 1]");
  }
}

}  // namespace

double binomial_pmf(const BinomialParams& params) {
  validate(params);
  const int k = params.k;
  const int n = params.n;
  const double p = params.p;

  // Degenerate p: all mass on k=0 or k=n.
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;

  double log_coeff = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                     std::lgamma(n - k + 1.0);
  double log_pmf = log_coeff + k * std::log(p) + (n - k) * std::log1p(-p);
  double v = std::exp(log_pmf);
  return v > 1.0 ? 1.0 : v;
}

double binomial_tail_ge(int k0, double p, int n) {
  if (n < 1) throw std::invalid_argument("binomial: n must be >= 1");
  if (k0 < 0 || k0 > n + 1) {
    throw std::invalid_argument("binomial: tail start must satisfy 0 <= k0 <= n+1");
  }
  double acc = 0.0;
  for (int k = k0; k <= n; ++k) {
    acc += binomial_pmf({k, n, p});
  }
  return acc > 1.0 ? 1.0 : acc;
}

BinomialDerivation derive_p2(int k1, int k2, int n) {
  if (n < 1) throw std::invalid_argument("derive_p2: n must be >= 1");
  if (k1 < 0 || k1 >= k2 || k2 > n) {
    throw std::invalid_argument("derive_p2: anchors must satisfy 0 <= k1 < k2 <= n");
  }
  BinomialDerivation d;
  d.k1 = k1;
  d.k2 = k2;
  d.n = n;
  d.p2 = static_cast<double>(k1 + k2) / (2.0 * n);
  d.mu = static_cast<double>(k1 + k2) / 2.0;
  d.prob_never_flipped = binomial_pmf({0, n, d.p2});
  d.prob_majority_flipped = binomial_tail_ge((n + 1) / 2, d.p2, n);
  return d;
}

double symmetry_residual(const BinomialDerivation& d) {
  return std::abs(binomial_pmf({d.k1, d.n, d.p2}) -
                  binomial_pmf({d.k2, d.n, d.p2}));
}

int estimate_epoch_count(const std::vector<int>& past_run_lengths) {
  if (past_run_lengths.empty()) {
    throw std::invalid_argument("estimate_epoch_count: empty history");
  }
  long long sum = 0;
  for (int len : past_run_lengths) {
    if (len < 1) {
      throw std::invalid_argument("estimate_epoch_count: run lengths must be >= 1");
    }
    sum += len;
  }
  auto m = static_cast<long long>(past_run_lengths.size());
  // Round half up in exact integer arithmetic.
  return static_cast<int>((2 * sum + m) / (2 * m));
}

}  // namespace labnoise
