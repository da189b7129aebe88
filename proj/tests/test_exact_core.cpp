#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <vector>

#include "ewens/pmf.hpp"
#include "ewens/rational.hpp"
#include "ewens/stirling.hpp"

using namespace ewens;

namespace {

// Oracle: coefficients of x(x+1)...(x+n-1) by direct polynomial
// multiplication, no use of the row recurrence under test.
std::vector<mpz_class> rising_poly_coeffs(int n) {
  std::vector<mpz_class> c{1};  // constant polynomial 1
  for (int i = 0; i < n; ++i) {
    // multiply by (x + i)
    std::vector<mpz_class> next(c.size() + 1, mpz_class(0));
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += i * c[d];
    }
    c = std::move(next);
  }
  return c;  // c[k] = coefficient of x^k = |s(n,k)|
}

// Oracle: number of partitions of {1..n} into exactly k blocks, counted by
// enumerating restricted growth strings.  Independent of any recurrence.
long count_partitions(int n, int k) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  long count = 0;
  // a[i] = block index of element i; a[0] = 0; a[i] <= max(a[0..i-1]) + 1
  while (true) {
    int blocks = 0;
    for (int i = 0; i < n; ++i) blocks = std::max(blocks, a[static_cast<std::size_t>(i)] + 1);
    if (blocks == k) ++count;
    // next restricted growth string
    int i = n - 1;
    for (; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j)
        prefix_max = std::max(prefix_max, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= prefix_max) {
        ++a[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("first-kind rows match the polynomial product oracle") {
  for (int n = 1; n <= 60; ++n) {
    const StirlingRow row = stirling_first_row(n);
    const std::vector<mpz_class> oracle = rising_poly_coeffs(n);
    REQUIRE(row.n == n);
    REQUIRE(row.c.size() == static_cast<std::size_t>(n));
    CHECK(oracle[0] == 0);  // no constant term for n >= 1
    for (int k = 1; k <= n; ++k)
      CHECK(row.at(k) == oracle[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("first-kind row edges and known row") {
  const StirlingRow r5 = stirling_first_row(5);
  const long expect[5] = {24, 50, 35, 10, 1};
  for (int k = 1; k <= 5; ++k) CHECK(r5.at(k) == expect[k - 1]);

  for (int n : {1, 2, 7, 30, 150}) {
    const StirlingRow row = stirling_first_row(n);
    CHECK(row.at(n) == 1);
    CHECK(row.at(1) == factorial(n - 1));
    mpz_class sum = 0;
    for (int k = 1; k <= n; ++k) sum += row.at(k);
    CHECK(sum == factorial(n));  // row sum = n!
  }
}

TEST_CASE("row generating identity at several points") {
  // sum_k c(n,k) x^k = x(x+1)...(x+n-1), checked in exact rationals,
  // including a negative point where signs must cancel correctly.
  const std::vector<mpq_class> xs{mpq_class(1), mpq_class(2), mpq_class(1, 2),
                                  mpq_class(-3)};
  for (int n = 1; n <= 40; ++n) {
    const StirlingRow row = stirling_first_row(n);
    for (const mpq_class& x : xs) {
      mpq_class horner = 0;
      for (int k = n; k >= 1; --k) horner = horner * x + row.at(k);
      horner *= x;
      CHECK(horner == rising_factorial(x, n));
    }
  }
}

TEST_CASE("prefix sweep agrees with full rows and respects its cap") {
  StirlingPrefixSweep sweep(12);
  sweep.advance_to(25);
  const StirlingRow row = stirling_first_row(25);
  for (int k = 1; k <= 12; ++k) CHECK(sweep.at(k) == row.at(k));
  CHECK(sweep.n() == 25);
  sweep.advance();
  const StirlingRow row26 = stirling_first_row(26);
  for (int k = 1; k <= 12; ++k) CHECK(sweep.at(k) == row26.at(k));

  CHECK_THROWS_AS(stirling_first_row(0), std::invalid_argument);
  CHECK_THROWS_AS(stirling_first_row(kStirlingRowCap + 1),
                  std::invalid_argument);
}

TEST_CASE("second-kind numbers match the set partition count") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      long oracle = (n == 0) ? (k == 0 ? 1 : 0) : count_partitions(n, k);
      CHECK(stirling_second(n, k) == oracle);
    }
  CHECK(stirling_second(4, 2) == 7);
  // Bell number B_6 as a row sum
  mpz_class bell = 0;
  for (int k = 0; k <= 6; ++k) bell += stirling_second(6, k);
  CHECK(bell == 203);
  // k beyond n is an empty count, not an error
  CHECK(stirling_second(3, 5) == 0);
  CHECK(stirling_second(0, 1) == 0);
  CHECK_THROWS_AS(stirling_second(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirling_second(3, -2), std::invalid_argument);
}

TEST_CASE("rising factorial on doubles") {
  CHECK(rising_factorial(1.0, 5) == doctest::Approx(120.0));
  CHECK(rising_factorial(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(rising_factorial(2.0, 0) == 1.0);
  CHECK_THROWS_AS(rising_factorial(1e308, 3), std::overflow_error);
}

TEST_CASE("rational theta parsing and exactness") {
  auto t = RationalTheta::parse("2/3");
  REQUIRE(t.has_value());
  CHECK(t->num() == 2);
  CHECK(t->den() == 3);
  CHECK(t->str() == "2/3");

  auto five = RationalTheta::parse("5");
  REQUIRE(five.has_value());
  CHECK(five->str() == "5");
  CHECK(five->to_double() == 5.0);

  auto canon = RationalTheta::parse("4/6");
  REQUIRE(canon.has_value());
  CHECK(canon->str() == "2/3");

  CHECK_FALSE(RationalTheta::parse("0.5").has_value());
  CHECK_FALSE(RationalTheta::parse("-1/2").has_value());
  CHECK_FALSE(RationalTheta::parse("3/0").has_value());
  CHECK_FALSE(RationalTheta::parse("").has_value());
  CHECK_FALSE(RationalTheta::parse("a/b").has_value());
  CHECK_FALSE(RationalTheta::parse("1/2/3").has_value());
  CHECK_THROWS_AS(RationalTheta(0, 1), std::domain_error);
  CHECK_THROWS_AS(RationalTheta(-2, 3), std::domain_error);

  // from_double is exact on dyadics and on every double's bit pattern
  CHECK(RationalTheta::from_double(0.5).value() == mpq_class(1, 2));
  CHECK(RationalTheta::from_double(0.375).str() == "3/8");
  const RationalTheta tenth = RationalTheta::from_double(0.1);
  CHECK(tenth.to_double() == 0.1);  // round trip is lossless
  CHECK(tenth.den() != 10);         // 0.1 is not exactly 1/10 in binary
  CHECK_THROWS_AS(RationalTheta::from_double(0.0), std::domain_error);
  CHECK_THROWS_AS(RationalTheta::from_double(-1.0), std::domain_error);
}

TEST_CASE("exact pmf normalizes and is log-concave") {
  const std::vector<RationalTheta> thetas{
      RationalTheta(1, 2), RationalTheta(2, 3), RationalTheta(1, 1),
      RationalTheta(3, 1)};
  for (const RationalTheta& theta : thetas)
    for (int n : {1, 2, 3, 10, 40}) {
      const ExactPmf pmf = ewens_pmf_exact(n, theta);
      mpq_class total = 0;
      for (int k = 1; k <= n; ++k) total += pmf.at(k);
      CHECK(total == 1);
      for (int k = 2; k < n; ++k)
        CHECK(pmf.at(k) * pmf.at(k) >= pmf.at(k - 1) * pmf.at(k + 1));
    }
}

TEST_CASE("exact pmf known small values") {
  // n=3, theta=1: cycle counts (2,3,1)/6
  const ExactPmf p3 = ewens_pmf_exact(3, RationalTheta(1, 1));
  CHECK(p3.at(1) == mpq_class(1, 3));
  CHECK(p3.at(2) == mpq_class(1, 2));
  CHECK(p3.at(3) == mpq_class(1, 6));

  // n=3, theta=2/3: P{K=1} = P{K=2} (the textbook tie)
  const ExactPmf ptie = ewens_pmf_exact(3, RationalTheta(2, 3));
  CHECK(ptie.at(1) == ptie.at(2));
  CHECK(ptie.at(1) > ptie.at(3));

  // exact mean equals sum theta/(theta+i-1)
  const RationalTheta theta(2, 3);
  const int n = 25;
  const ExactPmf pmf = ewens_pmf_exact(n, theta);
  mpq_class mean = 0;
  for (int k = 1; k <= n; ++k) mean += k * pmf.at(k);
  mpq_class expect = 0;
  for (int i = 1; i <= n; ++i)
    expect += theta.value() / (theta.value() + (i - 1));
  CHECK(mean == expect);
}

TEST_CASE("float pmf tracks the exact pmf to near machine precision") {
  const std::vector<RationalTheta> thetas{
      RationalTheta(1, 2), RationalTheta(2, 3), RationalTheta(1, 1),
      RationalTheta(3, 1)};
  for (const RationalTheta& theta : thetas)
    for (int n : {5, 30, 60}) {
      const ExactPmf exact = ewens_pmf_exact(n, theta);
      const FloatPmf approx = ewens_pmf_float(n, theta.to_double());
      for (int k = 1; k <= n; ++k)
        CHECK(std::abs(approx.at(k) - exact.at(k).get_d()) <= 1e-12);
    }
}

TEST_CASE("float pmf mass and mean at n=1000") {
  const double theta = 0.75;
  const FloatPmf pmf = ewens_pmf_float(1000, theta);
  double mass = 0.0, mean = 0.0;
  for (int k = 1000; k >= 1; --k) {  // ascending magnitude
    mass += pmf.at(k);
    mean += k * pmf.at(k);
  }
  CHECK(std::abs(mass - 1.0) <= 1e-13);
  double expect = 0.0;
  for (int i = 1000; i >= 1; --i) expect += theta / (theta + i - 1);
  CHECK(std::abs(mean - expect) <= 1e-9);
}

TEST_CASE("cdf accumulates to one and is monotone") {
  const FloatPmf pmf = ewens_pmf_float(200, 1.5);
  const std::vector<double> cdf = cdf_from_pmf(pmf);
  REQUIRE(cdf.size() == 200);
  for (std::size_t i = 1; i < cdf.size(); ++i) CHECK(cdf[i] >= cdf[i - 1]);
  CHECK(std::abs(cdf.back() - 1.0) <= 1e-13);
}

TEST_CASE("mgf ratio identity") {
  // closed form at n=3, theta=2/3, beta=log 2: value is exactly 7/2
  CHECK(std::abs(mgf_ratio(3, 2.0 / 3.0, std::log(2.0)) - 3.5) <= 1e-12);

  // against the direct sum over an exact pmf
  for (double theta : {0.5, 1.0, 2.0})
    for (double beta : {-1.0, -0.1, 0.1, 1.0})
      for (int n : {10, 100}) {
        const ExactPmf pmf =
            ewens_pmf_exact(n, RationalTheta::from_double(theta));
        double direct = 0.0;
        for (int k = n; k >= 1; --k)
          direct += std::exp(beta * k) * pmf.at(k).get_d();
        const double ratio = mgf_ratio(n, theta, beta);
        CHECK(std::abs(ratio / direct - 1.0) <= 1e-11);
      }
}
