#pragma once

#include <vector>

#include "ewens/polynomial.hpp"

namespace ewens {

// Probabilist's Hermite polynomial He_l, exact integer coefficients.
// He_0 = 1, He_1 = x, He_{l+1} = x He_l - l He_{l-1}.
RatPoly hermite(int l);

// C(n, k) for small n; exact in an unsigned long and in a double.
unsigned long binomial_ul(int n, int k);

// Complete Bell polynomials over any commutative ring, here instantiated
// with polynomials (differential operators).  Given arguments z_1..z_J
// (z[i-1] holds z_i), returns B_0..B_J via
//   B_0 = 1,  B_{j+1} = sum_{i=0..j} C(j,i) B_{j-i} z_{i+1}.
template <class T>
std::vector<Polynomial<T>> bell_sequence(
    const std::vector<Polynomial<T>>& z) {
  const int top = static_cast<int>(z.size());
  std::vector<Polynomial<T>> b;
  b.reserve(top + 1);
  b.push_back(Polynomial<T>::constant(T(1)));
  for (int j = 0; j < top; ++j) {
    Polynomial<T> next;
    for (int i = 0; i <= j; ++i)
      next += T(binomial_ul(j, i)) * (b[j - i] * z[i]);
    b.push_back(std::move(next));
  }
  return b;
}

// j-th cumulant correction chi_j(theta) = -(d/dbeta)^j log Gamma(theta e^beta)
// at beta = 0, expanded by Faa di Bruno into polygamma values:
//   chi_j = - sum_{l=1..j} S(j,l) psi^(l-1)(theta) theta^l
// with S the second-kind Stirling triangle.  j >= 1.
double log_gamma_cumulant(int j, double theta);

// Degree-(3j) correction polynomial H_j in the local expansion of the
// cycle-count probabilities.  H_0 = 1; only powers of the parity of j
// appear.  Built from the operator combination
//   A_j = D^{j+2}/((j+1)(j+2)) + chi_j(theta) D^j
// as H_j = (1/j!) [B_j(A_1..A_j) with D^l replaced by He_l(x)].
RealPoly edgeworth_polynomial(int j, double theta);

// Order-r local approximation to P{K_n = k}:
//   e^{-x^2/2}/sqrt(2 pi w) * sum_{j=0..r} H_j(x) w^{-j/2},
// w = theta log n, x = (k - w)/sqrt(w).  Requires n >= 2, r in [0, 8].
double edgeworth_pmf(int n, double theta, int k, int r);
std::vector<double> edgeworth_pmf_table(int n, double theta, int r);

// One-term corrected normal approximation to P{(K_n - w)/sqrt(w) <= x}:
//   Phi(x) + e^{-x^2/2}/sqrt(2 pi w) * (1/2 - (x^2-1)/6 + theta psi(theta)).
double edgeworth_cdf(int n, double theta, double x);

// Large-deviation approximation to P{K_n = k} for theta = 1 when k is of
// order log n but far from it.  With t = k/log n, requires
// log(n)/eta < k < eta log(n):
//   (1/Gamma(t)) n^{t - t log t - 1} (2 pi k)^{-1/2}
//     * sum_{s=0..q} H_{2s}(0, t) k^{-s}.
// Odd-index polynomials vanish at 0 and drop out.
double large_deviation_density(int n, int k, int q, double eta = 4.0);

}  // namespace ewens
