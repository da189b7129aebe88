#include "ewens/stirling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewens {

const mpz_class& StirlingRow::at(int k) const {
  if (k < 1 || k > n)
    throw std::out_of_range("stirling index k=" + std::to_string(k) +
                            " outside 1.." + std::to_string(n));
  return c[static_cast<std::size_t>(k) - 1];
}

StirlingPrefixSweep::StirlingPrefixSweep(int cap) : cap_(cap), n_(1) {
  if (cap < 1) throw std::invalid_argument("prefix cap must be >= 1");
  c_.emplace_back(1);  // c(1,1)
}

void StirlingPrefixSweep::advance() {
  // c(n+1,k) = c(n,k-1) + n * c(n,k), filled from the top so each c(n,k-1)
  // is still the old row when read.
  const unsigned long n = static_cast<unsigned long>(n_);
  const int old_size = size();
  if (old_size < cap_) c_.emplace_back(0);  // slot for k = n+1 (or unused)
  for (int k = size(); k >= 2; --k) {
    mpz_class& v = c_[static_cast<std::size_t>(k) - 1];
    mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(), n);
    v += c_[static_cast<std::size_t>(k) - 2];
  }
  mpz_mul_ui(c_[0].get_mpz_t(), c_[0].get_mpz_t(), n);
  ++n_;
}

void StirlingPrefixSweep::advance_to(int n) {
  if (n < n_) throw std::invalid_argument("sweep cannot move backwards");
  while (n_ < n) advance();
}

const mpz_class& StirlingPrefixSweep::at(int k) const {
  if (k < 1 || k > size())
    throw std::out_of_range("prefix index k=" + std::to_string(k) +
                            " outside 1.." + std::to_string(size()));
  return c_[static_cast<std::size_t>(k) - 1];
}

StirlingRow stirling_first_row(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("row index must be >= 1");
  if (n > max_n)
    throw std::invalid_argument("row " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(max_n));
  StirlingPrefixSweep sweep(n);
  sweep.advance_to(n);
  StirlingRow row;
  row.n = n;
  row.c.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) row.c.push_back(sweep.at(k));
  return row;
}

mpz_class stirling_second(int n, int k) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("second-kind indices must be nonnegative");
  if (k > n) return 0;  // no partition of n elements into more than n blocks
  // S(n+1,k) = S(n,k-1) + k * S(n,k), row by row from S(0,0) = 1.
  std::vector<mpz_class> row{mpz_class(1)};  // row[j] = S(m, j), m = 0
  for (int m = 1; m <= n; ++m) {
    row.emplace_back(0);
    for (int j = m; j >= 1; --j) {
      mpz_class& v = row[static_cast<std::size_t>(j)];
      mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(),
                 static_cast<unsigned long>(j));
      v += row[static_cast<std::size_t>(j) - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

mpz_class factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpq_class rising_factorial(const mpq_class& x, int n) {
  if (n < 0) throw std::invalid_argument("rising factorial needs n >= 0");
  mpq_class acc(1);
  mpq_class term(x);
  for (int i = 0; i < n; ++i, term += 1) acc *= term;
  return acc;
}

double rising_factorial(double x, int n) {
  if (n < 0) throw std::invalid_argument("rising factorial needs n >= 0");
  if (!std::isfinite(x)) throw std::domain_error("rising factorial of non-finite x");
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= x + static_cast<double>(i);
  if (!std::isfinite(acc))
    throw std::overflow_error("rising factorial overflows a double");
  return acc;
}

}  // namespace ewens
