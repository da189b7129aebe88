#pragma once

namespace ewens {

// Constants stored well past double precision; the compiler rounds to the
// nearest representable value.
inline constexpr double kEulerGamma =
    0.57721566490153286060651209008240243104215933593992;
inline constexpr double kZeta2 =
    1.6449340668482264364724151666460251892189499012068;
inline constexpr double kZeta3 =
    1.2020569031595942853997381615114499907649862923405;

// log Gamma(x) for x > 0.  Stirling series with Bernoulli coefficients
// after an argument shift into the asymptotic regime; relative error is a
// few ulp across (0, inf).
double log_gamma(double x);

// psi(x) = d/dx log Gamma(x), x > 0.
double digamma(double x);

// m-th derivative of digamma, x > 0, 0 <= m <= 12.  polygamma(0, x) is
// digamma(x).
double polygamma(int m, double x);

// (theta^2/2) * (2 psi'(theta) + theta psi''(theta)), positive for every
// theta > 0 (it equals theta^2 * sum k/(theta+k)^3).  Controls which
// neighbour wins when the mode location estimate sits near a half-integer:
// a positive value pushes the exact mode to the ceiling.
double ceiling_bias(double theta);

}  // namespace ewens
