#include "ewens/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ewens/special_functions.hpp"

namespace ewens {

const mpq_class& ExactPmf::at(int k) const {
  if (k < 1 || k > n)
    throw std::out_of_range("pmf index k=" + std::to_string(k) +
                            " outside 1.." + std::to_string(n));
  return p[static_cast<std::size_t>(k) - 1];
}

double FloatPmf::at(int k) const {
  if (k < 1 || k > n)
    throw std::out_of_range("pmf index k=" + std::to_string(k) +
                            " outside 1.." + std::to_string(n));
  return p[static_cast<std::size_t>(k) - 1];
}

ExactPmf ewens_pmf_exact(int n, const RationalTheta& theta, int max_n) {
  if (n < 1) throw std::invalid_argument("pmf needs n >= 1");
  const StirlingRow row = stirling_first_row(n, max_n);
  ExactPmf pmf;
  pmf.n = n;
  pmf.theta = theta.value();
  pmf.p.reserve(static_cast<std::size_t>(n));
  const mpq_class norm = rising_factorial(theta.value(), n);
  mpq_class tpow(1);
  for (int k = 1; k <= n; ++k) {
    tpow *= theta.value();
    pmf.p.push_back(tpow * row.at(k) / norm);
  }
  return pmf;
}

namespace {

// Error-free sum: s = fl(a+b), e = exact remainder.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double t = s - a;
  e = (a - (s - t)) + (b - t);
}

// Error-free product via fused multiply-add.
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

FloatPmf ewens_pmf_float(int n, double theta) {
  if (n < 1) throw std::invalid_argument("pmf needs n >= 1");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");

  // q[k] approximates P{xi_1 + ... + xi_i = k}; e[k] carries the rounding
  // residue of q[k] so the recurrence q[k] <- q[k](1-p) + q[k-1] p loses
  // nothing to cancellation until the final fold.  The first component is
  // deterministic (p = theta/theta = 1), so start from q[1] = 1.
  std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
  q[1] = 1.0;
  for (int i = 2; i <= n; ++i) {
    const double pi = theta / (theta + static_cast<double>(i - 1));
    const double qi = 1.0 - pi;
    for (int k = i; k >= 1; --k) {
      double a, ea, b, eb, s, es;
      two_prod(q[static_cast<std::size_t>(k)], qi, a, ea);
      two_prod(q[static_cast<std::size_t>(k) - 1], pi, b, eb);
      two_sum(a, b, s, es);
      q[static_cast<std::size_t>(k)] = s;
      e[static_cast<std::size_t>(k)] =
          ea + eb + es +
          e[static_cast<std::size_t>(k)] * qi +
          e[static_cast<std::size_t>(k) - 1] * pi;
    }
    // k = 0 stays exactly zero: P{K_i = 0} = 0 because xi_1 = 1.
  }

  FloatPmf pmf;
  pmf.n = n;
  pmf.theta = theta;
  pmf.p.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    pmf.p[static_cast<std::size_t>(k) - 1] =
        q[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k)];
  return pmf;
}

std::vector<double> cdf_from_pmf(const FloatPmf& pmf) {
  std::vector<double> cdf(pmf.p.size());
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < pmf.p.size(); ++i) {
    double s, err;
    two_sum(sum, pmf.p[i], s, err);
    comp += err;
    sum = s;
    cdf[i] = sum + comp;
  }
  return cdf;
}

double mgf_ratio(int n, double theta, double beta) {
  if (n < 1) throw std::invalid_argument("mgf ratio needs n >= 1");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  if (!std::isfinite(beta)) throw std::domain_error("beta must be finite");
  const double t = theta * std::exp(beta);
  const double nn = static_cast<double>(n);
  return std::exp(log_gamma(t + nn) - log_gamma(t) -
                  (log_gamma(theta + nn) - log_gamma(theta)));
}

}  // namespace ewens
