#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ewens {

// Strictly positive rational parameter for the exact code paths.
//
// The CLI keeps two regimes apart by syntax: "p/q" (or a bare integer)
// parses into this type and selects exact arithmetic, while a decimal
// literal selects the double paths.  A double can still be handed to the
// exact engine on demand: every finite double is exactly m * 2^e, so
// from_double() is lossless and the resulting comparisons are exact
// statements about the value the float path actually used.
class RationalTheta {
 public:
  explicit RationalTheta(mpq_class v);
  RationalTheta(long num, long den);

  static RationalTheta from_double(double t);

  // Accepts "p", "p/q" with optional surrounding spaces.  Returns nullopt
  // for anything else (decimal notation is deliberately not accepted).
  static std::optional<RationalTheta> parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

 private:
  mpq_class v_;  // canonicalized, > 0
};

}  // namespace ewens
