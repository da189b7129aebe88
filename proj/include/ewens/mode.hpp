#pragma once

#include <utility>
#include <vector>

#include "ewens/rational.hpp"

namespace ewens {

// Everything the mode analysis reports for a single (n, theta).
struct ModeReport {
  int n = 0;
  double theta = 0.0;
  long mode_least = 0;   // smallest maximizer of P{K_n = k}
  bool unique = false;   // strict maximizer?
  double max_prob = 0.0; // P{K_n = mode_least}
  double u_star = 0.0;   // asymptotic mode location estimate
  long nint = 0;         // nearest integer to u_star (ties round down)
  double frac = 0.0;     // fractional part of u_star
  double delta = 0.0;    // |u_star - nint|
  bool agrees = false;   // mode_least == nint
};

// Per-n record of a density sweep; matches the mode trace CSV columns.
struct ModeAgreement {
  long n = 0;
  long mode = 0;
  bool unique = false;
  double u_star = 0.0;
  double frac = 0.0;
  long nint = 0;
  bool agrees = false;
};

struct DensityResult {
  long agreements = 0;
  long total = 0;
  double fraction = 0.0;
  std::vector<ModeAgreement> trace;  // n ascending
};

struct CounterexampleResult {
  // n where the exact mode differs from nint(u_star); every candidate was
  // confirmed by exact integer comparisons, never by floats alone.
  std::vector<long> confirmed;
  long candidates_checked = 0;  // size of the prefiltered set
};

// u_star = theta log n - theta psi(theta) - 1/2.  The exact mode is one of
// floor(u_star), ceil(u_star) once n is moderately large.
double mode_estimate(int n, double theta);

// Nearest integer; an exact .5 fractional part rounds down.
long nearest_int(double x);

double frac_part(double x);  // in [0, 1)

// Exact mode of the cycle-count distribution.  Comparisons of adjacent
// weights theta^k c(n,k) reduce to big-integer comparisons
//   den(theta) * c(n,k)  vs  num(theta) * c(n,k+1),
// so the result carries a proof.  For n > 200 only a window
// [w - 10 sqrt(w), w + 10 sqrt(w)] around w = theta log n is scanned, with
// the boundary slopes checked to confirm the peak is interior; any
// ambiguity falls back to the full row.
ModeReport exact_mode(int n, const RationalTheta& theta);

// Float front end: convolution PMF and a windowed argmax.  If the top two
// weights are within a 1e-9 relative margin the call re-runs exactly with
// theta's dyadic value, so near-ties never get decided in doubles.
ModeReport exact_mode(int n, double theta);

// Integer window [lo, hi] guaranteed to contain the exact mode at theta = 1
// for n >= 3 (clamped to [1, n]; narrow once log n + gamma - 3/2 is large):
//   floor(log n + gamma + (zeta2 - zeta3)/d + h/d^2),  d = log n + gamma - 3/2,
// evaluated at the two ends h_lo, h_hi of the admissible offset interval.
std::pair<long, long> hammersley_window(int n, double h_lo = -1.098011,
                                        double h_hi = 1.430089);

// Predicted value of sqrt(2 pi w) * max_k P{K_n = k}, w = theta log n:
//   1 + (theta psi(theta) + theta^2 psi'(theta) + 1/12 - delta^2) / (2w)
// with delta the distance from u_star to its nearest integer (1/2 at ties).
double maximum_prediction(int n, double theta);

// Predicted scaled difference sqrt(2 pi w) (P{K=k+1} - P{K=k}) for
// k = nint(u_star + g):  -(2g + 1)/(2w).  Throws if k falls outside
// [1, n-1].
double neighbor_difference(int n, double theta, double g);

// sqrt(2 pi theta log n) * max_k P{K_n = k}, with the maximum taken from
// the exact big-integer weights.
double exact_scaled_maximum(int n, const RationalTheta& theta);

// Exact mode vs nint(u_star) agreement for every n in [3, N]; jobs > 1
// splits the range across threads, the trace is merged in n order and is
// bit-identical for any job count.
DensityResult density_experiment(int N, const RationalTheta& theta,
                                 int jobs = 1);
DensityResult density_experiment(int N, double theta, int jobs = 1);

// Scan n in [3, N] for disagreements.  Candidates are prefiltered to
// frac(u_star) in (1/2 - 3/log n, 1/2), where the positive ceiling_bias
// predicts mode = ceil(u_star) != nint(u_star); each candidate is then
// confirmed or rejected by the exact engine.
CounterexampleResult counterexample_search(int N, const RationalTheta& theta,
                                           int jobs = 1);
CounterexampleResult counterexample_search(int N, double theta, int jobs = 1);

}  // namespace ewens
