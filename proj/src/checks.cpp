#include "ewens/checks.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <string>
#include <vector>

#include "ewens/csv.hpp"
#include "ewens/expansion.hpp"
#include "ewens/mode.hpp"
#include "ewens/pmf.hpp"
#include "ewens/special_functions.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool check_row_sums() {
  // sum_k c(n,k) = n!; every permutation has some number of cycles.
  for (int n = 1; n <= 30; ++n) {
    const StirlingRow row = stirling_first_row(n);
    mpz_class sum(0);
    for (int k = 1; k <= n; ++k) sum += row.at(k);
    if (sum != factorial(n)) return false;
    if (row.at(n) != 1) return false;
    if (row.at(1) != factorial(n - 1)) return false;
  }
  return true;
}

bool check_second_kind() {
  if (stirling_second(0, 0) != 1) return false;
  if (stirling_second(4, 2) != 7) return false;
  for (int n = 1; n <= 12; ++n) {
    if (stirling_second(n, 1) != 1) return false;
    if (stirling_second(n, n) != 1) return false;
  }
  // Row sums are the set-partition counts (Bell numbers); spot check B_6.
  mpz_class b6(0);
  for (int k = 0; k <= 6; ++k) b6 += stirling_second(6, k);
  return b6 == 203;
}

bool check_rising_factorial() {
  if (rising_factorial(mpq_class(2, 3), 3) != mpq_class(80, 27)) return false;
  if (rising_factorial(mpq_class(5), 0) != 1) return false;
  return close(rising_factorial(2.0, 5), 720.0, 0.0);  // 2*3*4*5*6
}

bool check_exact_pmf_normalized() {
  for (auto [n, p, q] : {std::tuple<int, long, long>{10, 1, 2},
                         {25, 3, 1},
                         {40, 7, 5}}) {
    const ExactPmf pmf = ewens_pmf_exact(n, RationalTheta(p, q));
    mpq_class sum(0);
    for (int k = 1; k <= n; ++k) sum += pmf.at(k);
    if (sum != 1) return false;
  }
  return true;
}

bool check_float_pmf() {
  const FloatPmf pmf = ewens_pmf_float(2000, 0.7);
  double sum = 0.0;
  for (double v : pmf.p) sum += v;
  if (!close(sum, 1.0, 1e-12)) return false;
  double mean = 0.0;
  for (int k = 1; k <= pmf.n; ++k) mean += k * pmf.at(k);
  double expected = 0.0;
  for (int i = 1; i <= pmf.n; ++i) expected += 0.7 / (0.7 + i - 1);
  return close(mean, expected, 1e-10);
}

bool check_mgf_ratio() {
  const int n = 50;
  const double beta = 0.3;
  const ExactPmf pmf = ewens_pmf_exact(n, RationalTheta(2, 3));
  double direct = 0.0;
  for (int k = 1; k <= n; ++k)
    direct += std::exp(beta * k) * pmf.at(k).get_d();
  const double viaratio = mgf_ratio(n, 2.0 / 3.0, beta);
  return close(viaratio / direct, 1.0, 1e-9);
}

bool check_hermite() {
  for (int l = 2; l <= 12; ++l) {
    const RatPoly he = hermite(l), lo = hermite(l - 1), lo2 = hermite(l - 2);
    if (he.degree() != l) return false;
    if (he.c[static_cast<std::size_t>(l)] != 1) return false;
    // He_l = x He_{l-1} - (l-1) He_{l-2}, checked coefficientwise.
    RatPoly rhs = RatPoly::monomial(1, 1) * lo + mpq_class(-(l - 1)) * lo2;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(l); ++i)
      if (he.at(i) != rhs.at(i)) return false;
    // Parity: only powers of l's parity appear.
    for (std::size_t i = 0; i <= static_cast<std::size_t>(l); ++i)
      if ((static_cast<int>(i) % 2 != l % 2) && he.at(i) != 0) return false;
  }
  return true;
}

bool check_bell_scalars() {
  // With scalar arguments z_j = t^j the Bell recurrence must reproduce the
  // series coefficients of exp(sum z_j x^j / j!) through the top order.
  for (double t : {0.5, 1.0}) {
    const int top = 6;
    std::vector<RealPoly> z;
    double tp = 1.0;
    for (int j = 1; j <= top; ++j) {
      tp *= t;
      z.push_back(RealPoly::constant(tp));
    }
    const auto b = bell_sequence(z);
    // exp series composition, truncated at x^top.
    std::vector<double> inner(static_cast<std::size_t>(top) + 1, 0.0);
    double fact = 1.0;
    tp = 1.0;
    for (int j = 1; j <= top; ++j) {
      fact *= j;
      tp *= t;
      inner[static_cast<std::size_t>(j)] = tp / fact;
    }
    std::vector<double> expo(static_cast<std::size_t>(top) + 1, 0.0);
    expo[0] = 1.0;
    std::vector<double> power(expo);  // inner^m / m! accumulated
    for (int m = 1; m <= top; ++m) {
      std::vector<double> next(static_cast<std::size_t>(top) + 1, 0.0);
      for (int i = 0; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j)
          next[static_cast<std::size_t>(i + j)] +=
              power[static_cast<std::size_t>(i)] *
              inner[static_cast<std::size_t>(j)] / m;
      power = next;
      for (int i = 0; i <= top; ++i)
        expo[static_cast<std::size_t>(i)] += power[static_cast<std::size_t>(i)];
    }
    double fj = 1.0;
    for (int j = 1; j <= top; ++j) {
      fj *= j;
      const double via_bell = b[static_cast<std::size_t>(j)].at(0) / fj;
      if (!close(via_bell, expo[static_cast<std::size_t>(j)], 1e-12))
        return false;
    }
  }
  return true;
}

bool check_expansion_polynomials() {
  const double theta = 1.3;
  for (int j = 0; j <= 6; ++j) {
    const RealPoly h = edgeworth_polynomial(j, theta);
    if (h.degree() > 3 * j) return false;
    for (std::size_t i = 0; i < h.c.size(); ++i)
      if ((static_cast<int>(i) % 2 != j % 2) && h.c[i] != 0.0) return false;
  }
  // H_1 = x^3/6 + (chi_1 - 1/2) x with chi_1 = -theta psi(theta).
  const RealPoly h1 = edgeworth_polynomial(1, theta);
  const double chi1 = -theta * digamma(theta);
  return close(h1.at(3), 1.0 / 6.0, 1e-15) &&
         close(h1.at(1), chi1 - 0.5, 1e-13) && h1.at(0) == 0.0 &&
         h1.at(2) == 0.0;
}

bool check_polygamma() {
  for (int m = 0; m <= 6; ++m) {
    for (double x : {0.5, 1.0, 2.5, 7.0}) {
      const double step = (m % 2 == 0 ? 1.0 : -1.0) *
                          std::tgamma(m + 1.0) * std::pow(x, -(m + 1));
      // psi_m(x+1) - psi_m(x) = (-1)^m m! x^-(m+1), relative to the step.
      const double resid =
          polygamma(m, x + 1.0) - polygamma(m, x) - step;
      if (std::fabs(resid / step) > 1e-12) return false;
    }
  }
  return close(digamma(1.0), -kEulerGamma, 1e-13) &&
         close(polygamma(1, 1.0), kZeta2, 1e-12) &&
         close(polygamma(2, 1.0), -2.0 * kZeta3, 1e-11);
}

bool check_log_gamma() {
  if (!close(log_gamma(1.0), 0.0, 1e-13)) return false;
  if (!close(log_gamma(2.0), 0.0, 1e-13)) return false;
  if (!close(log_gamma(0.5), 0.5 * std::log(std::acos(-1.0)), 1e-14))
    return false;
  for (double x : {0.5, 0.9, 3.7, 10.0}) {
    const double fd =
        (log_gamma(x + 1e-5) - log_gamma(x - 1e-5)) / 2e-5;
    if (!close(fd, digamma(x), 1e-8)) return false;
  }
  return true;
}

bool check_mode_small() {
  const ModeReport r = exact_mode(3, RationalTheta(2, 3));
  if (r.mode_least != 1 || r.unique) return false;
  const ModeReport r2 = exact_mode(1, RationalTheta(1, 1));
  if (r2.mode_least != 1 || !r2.unique) return false;
  if (nearest_int(2.5) != 2 || nearest_int(-2.5) != -3) return false;
  if (nearest_int(3.49) != 3 || nearest_int(3.51) != 4) return false;
  const double u100 = mode_estimate(100, 1.0);
  return close(u100, std::log(100.0) + kEulerGamma - 0.5, 1e-12);
}

bool check_window_and_density() {
  for (int n : {31, 100, 1000}) {
    const auto [lo, hi] = hammersley_window(n);
    const ModeReport r = exact_mode(n, RationalTheta(1, 1));
    if (r.mode_least < lo || r.mode_least > hi) return false;
  }
  const DensityResult d = density_experiment(100, RationalTheta(1, 1));
  if (d.total != 98 || d.trace.front().n != 3) return false;
  if (d.trace.front().mode != 2) return false;  // n=3: P{K=2} = 3/6 wins
  return d.fraction > 0.5;
}

bool check_csv_deterministic() {
  const FloatPmf pmf = ewens_pmf_float(40, 1.25);
  return csv_pmf(pmf) == csv_pmf(pmf) &&
         format_double(1.0 / 3.0) == "0.33333333333333331";
}

}  // namespace

int run_seed_check(std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"stirling row sums and edges", check_row_sums},
      {"second-kind triangle", check_second_kind},
      {"rising factorial", check_rising_factorial},
      {"exact pmf normalization", check_exact_pmf_normalized},
      {"float pmf mass and mean", check_float_pmf},
      {"mgf ratio vs direct sum", check_mgf_ratio},
      {"hermite recurrence and parity", check_hermite},
      {"bell scalar generating identity", check_bell_scalars},
      {"expansion polynomial structure", check_expansion_polynomials},
      {"polygamma recurrence and values", check_polygamma},
      {"log-gamma values and derivative", check_log_gamma},
      {"mode reports on small cases", check_mode_small},
      {"window containment and density", check_window_and_density},
      {"csv determinism", check_csv_deterministic},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "   ok  " : " FAIL  ") << name << note << "\n";
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "all checks passed"
                        : std::to_string(failures) + " check(s) failed")
      << "\n";
  return failures;
}

}  // namespace ewens
