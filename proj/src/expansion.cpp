#include "ewens/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ewens/special_functions.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

RatPoly hermite(int l) {
  if (l < 0) throw std::invalid_argument("hermite index must be >= 0");
  RatPoly prev = RatPoly::constant(1);              // He_0
  if (l == 0) return prev;
  RatPoly cur = RatPoly::monomial(1, 1);            // He_1
  const RatPoly x = RatPoly::monomial(1, 1);
  for (int i = 1; i < l; ++i) {
    RatPoly next = x * cur + mpq_class(-i) * prev;  // He_{i+1} = x He_i - i He_{i-1}
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

unsigned long binomial_ul(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial outside 0 <= k <= n");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  if (!b.fits_ulong_p()) throw std::overflow_error("binomial too large");
  return b.get_ui();
}

double log_gamma_cumulant(int j, double theta) {
  if (j < 1) throw std::invalid_argument("cumulant index must be >= 1");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  // Faa di Bruno for beta -> log Gamma(theta e^beta): the exponential inner
  // function turns the chain rule into second-kind Stirling weights.
  double sum = 0.0;
  double tpow = 1.0;
  for (int l = 1; l <= j; ++l) {
    tpow *= theta;
    sum += stirling_second(j, l).get_d() * polygamma(l - 1, theta) * tpow;
  }
  return -sum;
}

namespace {

constexpr int kMaxOrder = 8;

void require_order(int r) {
  if (r < 0 || r > kMaxOrder)
    throw std::invalid_argument("expansion order must lie in [0, " +
                                std::to_string(kMaxOrder) + "]");
}

// B_j over the operator ring, coefficient on D^l at index l.
RealPoly operator_bell(int j, double theta) {
  std::vector<RealPoly> ops;
  ops.reserve(static_cast<std::size_t>(j));
  for (int i = 1; i <= j; ++i) {
    RealPoly a = RealPoly::monomial(static_cast<std::size_t>(i) + 2,
                                    1.0 / ((i + 1.0) * (i + 2.0)));
    a += RealPoly::monomial(static_cast<std::size_t>(i),
                            log_gamma_cumulant(i, theta));
    ops.push_back(std::move(a));
  }
  return bell_sequence(ops).back();
}

}  // namespace

RealPoly edgeworth_polynomial(int j, double theta) {
  require_order(j);
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  if (j == 0) return RealPoly::constant(1.0);
  const RealPoly b = operator_bell(j, theta);
  double jfact = 1.0;
  for (int i = 2; i <= j; ++i) jfact *= i;
  RealPoly h;
  for (std::size_t l = 0; l < b.c.size(); ++l) {
    if (b.c[l] == 0.0) continue;
    const RatPoly he = hermite(static_cast<int>(l));
    RealPoly term;
    term.c.resize(he.c.size(), 0.0);
    for (std::size_t i = 0; i < he.c.size(); ++i)
      term.c[i] = he.c[i].get_d() * (b.c[l] / jfact);
    h += term;
  }
  return h;
}

double edgeworth_pmf(int n, double theta, int k, int r) {
  require_order(r);
  if (n < 2) throw std::domain_error("expansion needs n >= 2");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  const double w = theta * std::log(static_cast<double>(n));
  const double x = (k - w) / std::sqrt(w);
  double sum = 0.0;
  double scale = 1.0;
  for (int j = 0; j <= r; ++j) {
    sum += edgeworth_polynomial(j, theta).eval(x) * scale;
    scale /= std::sqrt(w);
  }
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi * w) * sum;
}

std::vector<double> edgeworth_pmf_table(int n, double theta, int r) {
  require_order(r);
  if (n < 2) throw std::domain_error("expansion needs n >= 2");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  const double w = theta * std::log(static_cast<double>(n));
  const double root_w = std::sqrt(w);
  std::vector<RealPoly> h;
  h.reserve(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) h.push_back(edgeworth_polynomial(j, theta));
  std::vector<double> out(static_cast<std::size_t>(n));
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * w);
  for (int k = 1; k <= n; ++k) {
    const double x = (k - w) / root_w;
    double sum = 0.0;
    double scale = 1.0;
    for (int j = 0; j <= r; ++j) {
      sum += h[static_cast<std::size_t>(j)].eval(x) * scale;
      scale /= root_w;
    }
    out[static_cast<std::size_t>(k) - 1] = std::exp(-0.5 * x * x) * norm * sum;
  }
  return out;
}

double edgeworth_cdf(int n, double theta, double x) {
  if (n < 2) throw std::domain_error("expansion needs n >= 2");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  if (!std::isfinite(x)) throw std::domain_error("x must be finite");
  const double w = theta * std::log(static_cast<double>(n));
  const double phi = 0.5 * std::erfc(-x / std::numbers::sqrt2);
  const double corr = 0.5 - (x * x - 1.0) / 6.0 + theta * digamma(theta);
  return phi + std::exp(-0.5 * x * x) /
                   std::sqrt(2.0 * std::numbers::pi * w) * corr;
}

double large_deviation_density(int n, int k, int q, double eta) {
  if (n < 3) throw std::domain_error("largedev window needs n >= 3");
  if (q < 0 || 2 * q > kMaxOrder)
    throw std::invalid_argument("largedev order must lie in [0, " +
                                std::to_string(kMaxOrder / 2) + "]");
  if (!(eta > 1.0))
    throw std::invalid_argument("window parameter eta must exceed 1");
  const double logn = std::log(static_cast<double>(n));
  if (!(logn / eta < k && k < eta * logn))
    throw std::domain_error("k outside the admissible window (log n / eta, "
                            "eta log n)");
  const double t = k / logn;  // effective parameter of the tilted law
  double sum = 0.0;
  double kpow = 1.0;
  for (int s = 0; s <= q; ++s) {
    sum += edgeworth_polynomial(2 * s, t).eval(0.0) / kpow;
    kpow *= k;
  }
  const double log_lead = (t - t * std::log(t) - 1.0) * logn - log_gamma(t);
  return std::exp(log_lead) / std::sqrt(2.0 * std::numbers::pi * k) * sum;
}

}  // namespace ewens
