#include "ewens/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewens {

namespace {

// B_2, B_4, ..., B_24.
constexpr double kBernoulli[12] = {
    1.0 / 6,           -1.0 / 30,        1.0 / 42,
    -1.0 / 30,         5.0 / 66,         -691.0 / 2730,
    7.0 / 6,           -3617.0 / 510,    43867.0 / 798,
    -174611.0 / 330,   854513.0 / 138,   -236364091.0 / 2730};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561763986;

void require_positive(double x, const char* who) {
  if (!(x > 0) || !std::isfinite(x))
    throw std::domain_error(std::string(who) + " needs a positive finite x");
}

// Asymptotic tail of log Gamma at y, valid once y is comfortably large:
// sum B_2k / (2k (2k-1) y^(2k-1)).
double log_gamma_tail(double y) {
  const double inv2 = 1.0 / (y * y);
  double pow = 1.0 / y;
  double sum = 0.0;
  for (int k = 1; k <= 12; ++k) {
    sum += kBernoulli[k - 1] / (2 * k * (2 * k - 1.0)) * pow;
    pow *= inv2;
  }
  return sum;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  // Shift into y >= 15 where the Bernoulli tail is far below one ulp, then
  // remove the shifted factors through a single log of their product.
  double shift_log = 0.0;
  double y = x;
  if (y < 15.0) {
    double prod = 1.0;
    while (y < 15.0) {
      prod *= y;
      y += 1.0;
    }
    shift_log = std::log(prod);
  }
  const double core = (y - 0.5) * std::log(y) - y + kHalfLog2Pi;
  return core + log_gamma_tail(y) - shift_log;
}

double digamma(double x) {
  require_positive(x, "digamma");
  // psi(x) = psi(y) - sum 1/(x+i) over the shifted-out terms,
  // psi(y) = log y - 1/(2y) - sum B_2k / (2k y^2k).
  double shift = 0.0;
  double y = x;
  while (y < 15.0) {
    shift += 1.0 / y;
    y += 1.0;
  }
  const double inv2 = 1.0 / (y * y);
  double pow = inv2;
  double tail = 0.0;
  for (int k = 1; k <= 12; ++k) {
    tail += kBernoulli[k - 1] / (2 * k) * pow;
    pow *= inv2;
  }
  return std::log(y) - 0.5 / y - tail - shift;
}

double polygamma(int m, double x) {
  if (m < 0 || m > 12)
    throw std::invalid_argument("polygamma order must lie in [0, 12]");
  require_positive(x, "polygamma");
  if (m == 0) return digamma(x);

  // Recurrence psi_m(x) = psi_m(x+1) - (-1)^m m! x^-(m+1) moves the
  // argument up to y >= 15 + m, where the asymptotic series
  //   (-1)^(m-1) [ (m-1)!/y^m + m!/(2 y^(m+1))
  //                + sum_k B_2k (2k+m-1)!/((2k)! y^(2k+m)) ]
  // converges to machine precision within the stored coefficients.
  const double y_min = 15.0 + m;
  double shift = 0.0;  // accumulates sum (x+i)^-(m+1)
  double y = x;
  double m1fact = 1.0;
  for (int i = 2; i < m; ++i) m1fact *= i;  // (m-1)!
  const double mfact = m1fact * m;          // m!
  while (y < y_min) {
    shift += std::pow(y, -(m + 1));
    y += 1.0;
  }

  const double inv2 = 1.0 / (y * y);
  double series = m1fact / std::pow(y, m) + mfact / (2.0 * std::pow(y, m + 1));
  double factor = mfact * (m + 1) / 2.0;  // (2k+m-1)!/(2k)! at k = 1
  double pow = std::pow(y, -(m + 2));
  for (int k = 1; k <= 12; ++k) {
    series += kBernoulli[k - 1] * factor * pow;
    factor *= static_cast<double>(2 * k + m) * (2 * k + m + 1) /
              ((2 * k + 1.0) * (2 * k + 2.0));
    pow *= inv2;
  }

  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m-1)
  // Undo the shift: subtract (-1)^m m! (x+i)^-(m+1), i.e. add for odd m.
  return sign * series + (m % 2 == 1 ? mfact * shift : -mfact * shift);
}

double ceiling_bias(double theta) {
  require_positive(theta, "ceiling_bias");
  return 0.5 * theta * theta *
         (2.0 * polygamma(1, theta) + theta * polygamma(2, theta));
}

}  // namespace ewens
