#include "ewens/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ewens {

namespace {

mpq_class checked(mpq_class v) {
  v.canonicalize();
  if (sgn(v) <= 0) throw std::domain_error("theta must be positive");
  return v;
}

}  // namespace

RationalTheta::RationalTheta(mpq_class v) : v_(checked(std::move(v))) {}

RationalTheta::RationalTheta(long num, long den) {
  if (den == 0) throw std::domain_error("theta denominator is zero");
  v_ = checked(mpq_class(num, den));
}

RationalTheta RationalTheta::from_double(double t) {
  if (!(t > 0) || t != t || t == 2 * t)  // rejects NaN, inf, non-positive
    throw std::domain_error("theta must be a positive finite number");
  return RationalTheta(mpq_class(t));  // exact: t is m * 2^e
}

std::optional<RationalTheta> RationalTheta::parse(const std::string& text) {
  std::size_t i = 0, j = text.size();
  while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string s = text.substr(i, j - i);
  if (s.empty()) return std::nullopt;
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'))
      return std::nullopt;
  const auto slash = s.find('/');
  if (slash != s.rfind('/')) return std::nullopt;
  try {
    if (slash == std::string::npos) return RationalTheta(mpq_class(s));
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    mpz_class den_z(den);
    if (den_z == 0) return std::nullopt;
    mpq_class q(mpz_class(num), den_z);
    return RationalTheta(std::move(q));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

std::string RationalTheta::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace ewens
