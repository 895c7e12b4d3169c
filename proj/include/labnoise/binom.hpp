#pragma once

#include <vector>

namespace labnoise {

struct BinomialParams {
  int k = 0;       // flip count, 0 <= k <= n
  int n = 1;       // epoch count, n >= 1
  double p = 0.0;  // flip probability in [0, 1]
};

/// Result of the epoch-wise flip-probability derivation: pick anchors k1 < k2
/// and choose p2 so the binomial mean lands midway between them.
struct BinomialDerivation {
  int k1 = 0;
  int k2 = 0;
  int n = 1;
  double mu = 0.0;  // p2 * n
  double p2 = 0.0;  // (k1 + k2) / (2n)
  double prob_never_flipped = 0.0;     // B(k=0 | p2, n)
  double prob_majority_flipped = 0.0;  // B(k >= ceil(n/2) | p2, n)
};

/// B(k | p, n) = C(n,k) p^k (1-p)^(n-k), accumulated in log space.
double binomial_pmf(const BinomialParams& params);

/// Upper tail sum_{k=k0}^{n} B(k | p, n). k0 may be n+1 (empty tail = 0).
double binomial_tail_ge(int k0, double p, int n);

/// Derives p2 = (k1 + k2) / (2n) and evaluates both flip-count constraint
/// probabilities at the derived p2. Requires 0 <= k1 < k2 <= n, n >= 1.
BinomialDerivation derive_p2(int k1, int k2, int n);

/// |B(k1) - B(k2)| at the derived p2: how far the anchor-matching heuristic
/// is from exact for this derivation. Reported as a diagnostic, not asserted.
double symmetry_residual(const BinomialDerivation& d);

/// Mean of past run lengths rounded to the nearest integer, ties up.
int estimate_epoch_count(const std::vector<int>& past_run_lengths);

}  // namespace labnoise
