#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ewens {

// Dense univariate polynomial; c[i] is the coefficient on the i-th power.
// The same container serves two readings: a polynomial in the scaled
// variable x, and a constant-coefficient differential operator where index
// i means the i-th derivative.  The ring algebra is identical, only the
// interpretation of the index differs.
template <class T>
struct Polynomial {
  std::vector<T> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c(std::move(coeffs)) {}

  static Polynomial constant(T v) { return Polynomial{{std::move(v)}}; }

  // x^k with coefficient v.
  static Polynomial monomial(std::size_t k, T v) {
    Polynomial p;
    p.c.assign(k + 1, T(0));
    p.c[k] = std::move(v);
    return p;
  }

  int degree() const {  // -1 for the zero polynomial
    for (std::size_t i = c.size(); i-- > 0;)
      if (c[i] != T(0)) return static_cast<int>(i);
    return -1;
  }

  T at(std::size_t i) const { return i < c.size() ? c[i] : T(0); }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + X(c[i]);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c.empty() || b.c.empty()) return Polynomial{};
    Polynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }

  friend Polynomial operator*(const T& s, Polynomial p) {
    for (auto& v : p.c) v = s * v;
    return p;
  }
};

using RatPoly = Polynomial<mpq_class>;
using RealPoly = Polynomial<double>;

}  // namespace ewens
