#pragma once

#include <gmpxx.h>

#include <vector>

namespace ewens {

// Row n of the unsigned Stirling triangle of the first kind:
// c(n,k) counts permutations of n elements with exactly k cycles.
// Entries are indexed k = 1..n.
struct StirlingRow {
  int n = 0;
  std::vector<mpz_class> c;  // c[k-1] = c(n,k)

  const mpz_class& at(int k) const;  // 1-based, range-checked
};

// Full rows get large quickly (row n holds n big integers of ~n log2 n
// bits), so the one-shot builder refuses n past a cap unless the caller
// raises it explicitly.
inline constexpr int kStirlingRowCap = 5000;

StirlingRow stirling_first_row(int n, int max_n = kStirlingRowCap);

// Maintains the prefix c(n,k), k <= cap, while n advances one step at a
// time.  The recurrence c(n+1,k) = c(n,k-1) + n*c(n,k) never reads past
// position k, so a truncated prefix stays exactly correct for all k <= cap.
// Mode sweeps only ever inspect k = O(theta log n), which makes a sweep to
// n = 10^4 a few thousand small big-integer updates instead of gigabytes
// of full rows.
class StirlingPrefixSweep {
 public:
  explicit StirlingPrefixSweep(int cap);

  void advance();            // n -> n+1
  void advance_to(int n);    // repeated advance(), n may not go backwards

  int n() const { return n_; }
  int size() const { return static_cast<int>(c_.size()); }  // = min(n, cap)
  const mpz_class& at(int k) const;  // 1-based, k <= size()

 private:
  int cap_;
  int n_;
  std::vector<mpz_class> c_;
};

// Stirling numbers of the second kind: S(n,k) counts partitions of an
// n-element set into k nonempty blocks.  Domain n >= 0, 0 <= k <= n.
mpz_class stirling_second(int n, int k);

mpz_class factorial(int n);

// Rising factorial x^(n) = x (x+1) ... (x+n-1), with x^(0) = 1.
mpq_class rising_factorial(const mpq_class& x, int n);

// Float overload; throws std::overflow_error if the product leaves the
// finite double range.
double rising_factorial(double x, int n);

}  // namespace ewens
