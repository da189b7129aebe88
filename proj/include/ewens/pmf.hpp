#pragma once

#include <gmpxx.h>

#include <vector>

#include "ewens/rational.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

// Distribution of the cycle count K_n under the one-parameter permutation
// model: P{K_n = k} = theta^k c(n,k) / theta^(n), k = 1..n.

struct ExactPmf {
  int n = 0;
  mpq_class theta;
  std::vector<mpq_class> p;  // p[k-1] = P{K_n = k}

  const mpq_class& at(int k) const;  // 1-based, range-checked
};

struct FloatPmf {
  int n = 0;
  double theta = 0.0;
  std::vector<double> p;  // p[k-1] = P{K_n = k}

  double at(int k) const;  // 1-based, range-checked
};

ExactPmf ewens_pmf_exact(int n, const RationalTheta& theta,
                         int max_n = kStirlingRowCap);

// Sequential convolution of the Bernoulli components with compensated
// (error-free transform) accumulation: K_n = xi_1 + ... + xi_n where
// xi_i takes value 1 with probability theta/(theta+i-1).  Per-entry
// absolute error stays near machine epsilon even at n = 2*10^4, which the
// plain recurrence would not guarantee.
FloatPmf ewens_pmf_float(int n, double theta);

// Cumulative sums F[k-1] = P{K_n <= k}.
std::vector<double> cdf_from_pmf(const FloatPmf& pmf);

// Moment generating function ratio E exp(beta K_n) =
// (theta e^beta)^(n) / theta^(n), evaluated through log-gamma ratios so
// n in the thousands cannot overflow.
double mgf_ratio(int n, double theta, double beta);

}  // namespace ewens
