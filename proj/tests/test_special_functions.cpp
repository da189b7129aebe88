#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ewens/special_functions.hpp"

using namespace ewens;

namespace {

// Compensated sum so 10^5-term oracles keep near machine precision.
struct Kahan {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Tail of sum_{k>K} f(k) by the midpoint rule at M = K + 1/2:
// integral_M^inf f + f'(M)/24, good to O(f'''(M)).  Each oracle below
// supplies the integral and derivative in closed form.

double gamma_oracle() {
  const int K = 200000;
  Kahan h;
  for (int k = K; k >= 1; --k) h.add(1.0 / k);
  const double Kd = K;
  return h.s - std::log(Kd) - 1.0 / (2.0 * Kd) + 1.0 / (12.0 * Kd * Kd) -
         1.0 / (120.0 * Kd * Kd * Kd * Kd);
}

double zeta2_oracle() {
  const int K = 100000;
  Kahan s;
  for (int k = K; k >= 1; --k) s.add(1.0 / (static_cast<double>(k) * k));
  const double m = K + 0.5;
  return s.s + 1.0 / m - 1.0 / (12.0 * m * m * m);
}

double zeta3_oracle() {
  const int K = 100000;
  Kahan s;
  for (int k = K; k >= 1; --k) {
    const double kd = k;
    s.add(1.0 / (kd * kd * kd));
  }
  const double m = K + 0.5;
  return s.s + 1.0 / (2.0 * m * m) - 1.0 / (8.0 * m * m * m * m);
}

// psi(x) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+x))
double digamma_oracle(double x) {
  const int K = 200000;
  Kahan s;
  for (int k = K; k >= 0; --k) s.add(1.0 / (k + 1.0) - 1.0 / (k + x));
  const double m = K + 0.5;
  const double integral = std::log((m + x) / (m + 1.0));
  const double deriv = -1.0 / ((m + 1.0) * (m + 1.0)) + 1.0 / ((m + x) * (m + x));
  return -gamma_oracle() + s.s + integral + deriv / 24.0;
}

// psi^(m)(x) = (-1)^(m+1) m! sum_{k>=0} (x+k)^-(m+1), m >= 1
double polygamma_oracle(int m, double x) {
  const int K = 100000;
  Kahan s;
  for (int k = K; k >= 0; --k) s.add(std::pow(x + k, -(m + 1.0)));
  const double t = x + K + 0.5;
  const double tail = std::pow(t, -static_cast<double>(m)) / m -
                      (m + 1.0) * std::pow(t, -(m + 2.0)) / 24.0;
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  return sign * mfact * (s.s + tail);
}

// direct series for the tie-breaking constant: theta^2 sum_{k>=1} k/(theta+k)^3
double ceiling_bias_oracle(double theta) {
  const int K = 100000;
  Kahan s;
  for (int k = K; k >= 1; --k) {
    const double u = theta + k;
    s.add(k / (u * u * u));
  }
  const double m = K + 0.5;
  const double u0 = theta + m;
  const double integral = 1.0 / u0 - theta / (2.0 * u0 * u0);
  const double deriv = (theta - 2.0 * m) / (u0 * u0 * u0 * u0);
  return theta * theta * (s.s + integral + deriv / 24.0);
}

}  // namespace

TEST_CASE("stored constants agree with independent series") {
  CHECK(std::abs(kEulerGamma - gamma_oracle()) <= 5e-14);
  CHECK(std::abs(kZeta2 - zeta2_oracle()) <= 5e-15);
  CHECK(std::abs(kZeta3 - zeta3_oracle()) <= 5e-15);
  const double pi = std::numbers::pi;
  CHECK(std::abs(kZeta2 - pi * pi / 6.0) <= 1e-15);
}

TEST_CASE("log gamma against the C library and exact identities") {
  const std::vector<double> xs{0.1, 0.5, 0.9, 1.0, 1.5, 2.0,
                               3.7, 8.2, 15.0, 42.5, 300.0};
  for (double x : xs) {
    const double ref = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - ref) <=
          1e-13 * std::max(1.0, std::abs(ref)));
  }
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) <= 1e-14);
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);

  // recurrence log Gamma(x+1) = log Gamma(x) + log x
  for (double x : {0.3, 0.75, 1.9, 6.4})
    CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <= 1e-13);

  // Legendre duplication: lg(2x) = lg(x) + lg(x+1/2) + (2x-1) log 2 - log sqrt(pi)
  for (double x : {0.4, 1.1, 2.6, 7.3}) {
    const double lhs = log_gamma(2.0 * x);
    const double rhs = log_gamma(x) + log_gamma(x + 0.5) +
                       (2.0 * x - 1.0) * std::log(2.0) -
                       0.5 * std::log(std::numbers::pi);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }

  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("digamma against the series oracle and known values") {
  for (double x : {0.25, 0.5, 1.0, 1.5, 2.7, 5.0, 10.3, 77.0})
    CHECK(std::abs(digamma(x) - digamma_oracle(x)) <= 1e-12);

  CHECK(std::abs(digamma(1.0) + kEulerGamma) <= 1e-14);
  CHECK(std::abs(digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) <= 1e-13);
  CHECK(std::abs(digamma(2.0) - (1.0 - kEulerGamma)) <= 1e-14);

  // recurrence and reflection
  for (double x : {0.2, 0.8, 3.3})
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-13);
  CHECK(std::abs(digamma(0.75) - digamma(0.25) - std::numbers::pi) <= 1e-13);

  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-1.0), std::domain_error);
}

TEST_CASE("polygamma against the series oracle") {
  for (int m = 1; m <= 6; ++m)
    for (double x : {0.25, 0.5, 1.0, 2.7, 5.0, 12.0}) {
      const double mine = polygamma(m, x);
      const double ref = polygamma_oracle(m, x);
      CHECK(std::abs(mine - ref) <= 1e-11 * std::abs(ref));
    }

  // order 0 is digamma
  CHECK(polygamma(0, 3.2) == digamma(3.2));

  // classical values at 1 and 1/2
  CHECK(std::abs(polygamma(1, 1.0) - kZeta2) <= 1e-14);
  CHECK(std::abs(polygamma(2, 1.0) + 2.0 * kZeta3) <= 1e-13);
  const double pi = std::numbers::pi;
  CHECK(std::abs(polygamma(1, 0.5) - pi * pi / 2.0) <= 1e-12);
  CHECK(std::abs(polygamma(3, 1.0) - pi * pi * pi * pi / 15.0) <= 1e-12);

  // recurrence psi^(m)(x+1) - psi^(m)(x) = (-1)^m m! / x^(m+1), measured
  // relative to the step because the two sides nearly cancel at small x
  for (int m : {1, 2, 4})
    for (double x : {0.3, 1.4, 6.0}) {
      double mfact = 1.0;
      for (int i = 2; i <= m; ++i) mfact *= i;
      const double step =
          ((m % 2 == 0) ? 1.0 : -1.0) * mfact * std::pow(x, -(m + 1.0));
      const double got = polygamma(m, x + 1.0) - polygamma(m, x);
      CHECK(std::abs(got - step) <= 1e-11 * std::abs(step));
    }

  CHECK_THROWS_AS(polygamma(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(13, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(2, 0.0), std::domain_error);
}

TEST_CASE("ceiling bias closed form equals its defining series") {
  for (double theta : {0.25, 0.5, 2.0 / 3.0, 1.0, 2.0, 3.0}) {
    const double closed = ceiling_bias(theta);
    CHECK(std::abs(closed - ceiling_bias_oracle(theta)) <= 1e-11);
    CHECK(closed > 0.0);
  }
  // at theta = 1 the series telescopes to zeta(2) - zeta(3)
  CHECK(std::abs(ceiling_bias(1.0) - (kZeta2 - kZeta3)) <= 1e-12);
}
