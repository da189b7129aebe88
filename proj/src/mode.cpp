#include "ewens/mode.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "ewens/pmf.hpp"
#include "ewens/special_functions.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

double mode_estimate(int n, double theta) {
  if (n < 1) throw std::invalid_argument("mode estimate needs n >= 1");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  return theta * std::log(static_cast<double>(n)) - theta * digamma(theta) -
         0.5;
}

long nearest_int(double x) {
  const double f = std::floor(x);
  return static_cast<long>(x - f > 0.5 ? f + 1.0 : f);
}

double frac_part(double x) { return x - std::floor(x); }

namespace {

constexpr int kFullScanLimit = 200;  // below this, scan the whole row

// Window around theta log n that provably swallows the peak at any
// realistic size; boundary failures fall back to a full scan anyway.
std::pair<int, int> scan_window(int n, double theta) {
  const double w = theta * std::log(static_cast<double>(n));
  const double half = 10.0 * std::sqrt(w);
  int lo = static_cast<int>(std::floor(w - half));
  int hi = static_cast<int>(std::ceil(w + half));
  if (lo < 1) lo = 1;
  if (hi > n) hi = n;
  if (hi < 1) hi = 1;
  return {lo, hi};
}

int window_cap(int n, double theta) {
  if (n <= kFullScanLimit) return n;
  const int hi = scan_window(n, theta).second;
  return std::min(n, std::max(kFullScanLimit, hi));
}

// Sign of w_{k+1} - w_k for the unnormalized weights w_k = theta^k c(n,k):
// compare num(theta) * c(n,k+1) against den(theta) * c(n,k) exactly.
int step_sign(const StirlingPrefixSweep& sweep, int k, const mpz_class& q1,
              const mpz_class& q2) {
  mpz_class lhs = q1 * sweep.at(k + 1);
  mpz_class rhs = q2 * sweep.at(k);
  return cmp(lhs, rhs);
}

struct PeakResult {
  long mode = 0;
  bool unique = false;
};

// Ascend from lo until the first non-increasing step.  The weight sequence
// is unimodal, so that step pins the least mode; equality there means a
// two-point plateau.  Returns nullopt when the window cannot certify the
// peak (never ascended away from an interior lo, or never stopped before
// an interior hi).
std::optional<PeakResult> peak_in_range(const StirlingPrefixSweep& sweep,
                                        int n, int lo, int hi,
                                        const mpz_class& q1,
                                        const mpz_class& q2) {
  for (int k = lo; k < hi; ++k) {
    const int s = step_sign(sweep, k, q1, q2);
    if (s > 0) continue;  // still ascending
    if (k == lo && lo > 1) return std::nullopt;  // peak may sit left of lo
    return PeakResult{k, s < 0};
  }
  if (hi < n) return std::nullopt;  // still ascending at the window edge
  return PeakResult{hi, true};      // increasing all the way: mode at n
}

PeakResult exact_peak(const StirlingPrefixSweep& sweep, int n, double theta_d,
                      const mpz_class& q1, const mpz_class& q2) {
  if (n == 1) return {1, true};
  if (n <= kFullScanLimit) {
    auto r = peak_in_range(sweep, n, 1, n, q1, q2);
    return *r;  // full range always certifies
  }
  const auto [lo, hi] = scan_window(n, theta_d);
  if (auto r = peak_in_range(sweep, n, lo, hi, q1, q2)) return *r;
  // Ambiguous window: redo with the whole row.  Expensive but exact, and
  // not expected to trigger; correctness beats the window heuristic.
  StirlingPrefixSweep full(n);
  full.advance_to(n);
  return *peak_in_range(full, n, 1, n, q1, q2);
}

ModeReport make_report(int n, double theta_d, long mode, bool unique,
                       double max_prob) {
  ModeReport rep;
  rep.n = n;
  rep.theta = theta_d;
  rep.mode_least = mode;
  rep.unique = unique;
  rep.max_prob = max_prob;
  rep.u_star = mode_estimate(n, theta_d);
  rep.nint = nearest_int(rep.u_star);
  rep.frac = frac_part(rep.u_star);
  rep.delta = std::fabs(rep.u_star - static_cast<double>(rep.nint));
  rep.agrees = rep.mode_least == rep.nint;
  return rep;
}

// P{K_n = k} as an exact rational evaluated from a truncated row:
//   q1^k q2^(n-k) c(n,k) / prod_{i=0..n-1} (q1 + i q2).
double exact_prob(const StirlingPrefixSweep& sweep, int n, int k,
                  const mpz_class& q1, const mpz_class& q2) {
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class q2pow;
  mpz_pow_ui(q2pow.get_mpz_t(), q2.get_mpz_t(),
             static_cast<unsigned long>(n - k));
  num *= q2pow;
  num *= sweep.at(k);
  mpz_class den(1), term;
  for (int i = 0; i < n; ++i) {
    term = q2;
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(),
               static_cast<unsigned long>(i));
    term += q1;
    den *= term;
  }
  mpq_class prob(num, den);
  prob.canonicalize();
  return prob.get_d();
}

}  // namespace

ModeReport exact_mode(int n, const RationalTheta& theta) {
  if (n < 1) throw std::invalid_argument("mode needs n >= 1");
  const double theta_d = theta.to_double();
  StirlingPrefixSweep sweep(window_cap(n, theta_d));
  sweep.advance_to(n);
  const PeakResult peak =
      exact_peak(sweep, n, theta_d, theta.num(), theta.den());
  const double max_prob = exact_prob(sweep, n, static_cast<int>(peak.mode),
                                     theta.num(), theta.den());
  return make_report(n, theta_d, peak.mode, peak.unique, max_prob);
}

ModeReport exact_mode(int n, double theta) {
  if (n < 1) throw std::invalid_argument("mode needs n >= 1");
  if (!(theta > 0) || !std::isfinite(theta))
    throw std::domain_error("theta must be a positive finite number");
  const FloatPmf pmf = ewens_pmf_float(n, theta);
  int best = 1;
  for (int k = 2; k <= n; ++k)
    if (pmf.at(k) > pmf.at(best)) best = k;
  double runner = 0.0;
  if (best > 1) runner = std::max(runner, pmf.at(best - 1));
  if (best < n) runner = std::max(runner, pmf.at(best + 1));
  const double margin = (pmf.at(best) - runner) / pmf.at(best);
  if (margin < 1e-9) {
    // Too close to call in floating point; the double theta is exactly a
    // dyadic rational, so the exact engine settles the tie for the very
    // value the float path was using.
    return exact_mode(n, RationalTheta::from_double(theta));
  }
  return make_report(n, theta, best, true, pmf.at(best));
}

std::pair<long, long> hammersley_window(int n, double h_lo, double h_hi) {
  if (n < 3)
    throw std::domain_error("the window formula needs n >= 3");
  if (!(h_lo < h_hi))
    throw std::invalid_argument("window offsets must satisfy h_lo < h_hi");
  const double logn = std::log(static_cast<double>(n));
  const double d = logn + kEulerGamma - 1.5;
  const double base = logn + kEulerGamma + (kZeta2 - kZeta3) / d;
  long lo = static_cast<long>(std::floor(base + h_lo / (d * d)));
  long hi = static_cast<long>(std::floor(base + h_hi / (d * d)));
  lo = std::max(lo, 1L);
  hi = std::min(hi, static_cast<long>(n));
  if (hi < lo) hi = lo;
  return {lo, hi};
}

double maximum_prediction(int n, double theta) {
  if (n < 2) throw std::invalid_argument("prediction needs n >= 2");
  const double w = theta * std::log(static_cast<double>(n));
  const double u = mode_estimate(n, theta);
  const double delta = std::fabs(u - static_cast<double>(nearest_int(u)));
  const double num = theta * digamma(theta) +
                     theta * theta * polygamma(1, theta) + 1.0 / 12.0 -
                     delta * delta;
  return 1.0 + num / (2.0 * w);
}

double neighbor_difference(int n, double theta, double g) {
  const double u = mode_estimate(n, theta);
  const long k = nearest_int(u + g);
  if (k < 1 || k >= n)
    throw std::domain_error("neighbour index k=" + std::to_string(k) +
                            " outside 1..n-1");
  const double w = theta * std::log(static_cast<double>(n));
  return -(2.0 * g + 1.0) / (2.0 * w);
}

double exact_scaled_maximum(int n, const RationalTheta& theta) {
  if (n < 2) throw std::invalid_argument("needs n >= 2");
  const double theta_d = theta.to_double();
  StirlingPrefixSweep sweep(window_cap(n, theta_d));
  sweep.advance_to(n);
  const PeakResult peak =
      exact_peak(sweep, n, theta_d, theta.num(), theta.den());
  const double m = exact_prob(sweep, n, static_cast<int>(peak.mode),
                              theta.num(), theta.den());
  const double w = theta_d * std::log(static_cast<double>(n));
  return std::sqrt(2.0 * std::numbers::pi * w) * m;
}

namespace {

template <class PerN>
void run_sweep_range(int n_lo, int n_hi, const RationalTheta& theta,
                     PerN&& per_n) {
  StirlingPrefixSweep sweep(window_cap(n_hi, theta.to_double()));
  sweep.advance_to(n_lo);
  for (int n = n_lo; n <= n_hi; ++n) {
    per_n(sweep, n);
    if (n < n_hi) sweep.advance();
  }
}

// Splits [3, N] across jobs threads; each worker owns a private prefix
// sweep, so results are independent of the split and merge in n order.
template <class PerN>
void parallel_sweep(int N, const RationalTheta& theta, int jobs,
                    PerN&& per_n_factory) {
  const int first = 3;
  if (N < first) throw std::invalid_argument("sweep needs N >= 3");
  jobs = std::max(1, std::min(jobs, N - first + 1));
  if (jobs == 1) {
    auto cb = per_n_factory(0);
    run_sweep_range(first, N, theta, cb);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  const int span = N - first + 1;
  for (int j = 0; j < jobs; ++j) {
    const int lo = first + static_cast<int>(
                               static_cast<long long>(span) * j / jobs);
    const int hi = first + static_cast<int>(
                               static_cast<long long>(span) * (j + 1) / jobs) -
                   1;
    threads.emplace_back([&, j, lo, hi] {
      try {
        auto cb = per_n_factory(j);
        run_sweep_range(lo, hi, theta, cb);
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

DensityResult density_experiment(int N, const RationalTheta& theta,
                                 int jobs) {
  const double theta_d = theta.to_double();
  const int first = 3;
  if (N < first) throw std::invalid_argument("density sweep needs N >= 3");
  std::vector<std::vector<ModeAgreement>> parts(
      static_cast<std::size_t>(std::max(1, jobs)));
  parallel_sweep(N, theta, jobs, [&](int job) {
    auto* bucket = &parts[static_cast<std::size_t>(job)];
    return [bucket, theta, theta_d](const StirlingPrefixSweep& sweep, int n) {
      const PeakResult peak =
          exact_peak(sweep, n, theta_d, theta.num(), theta.den());
      ModeAgreement rec;
      rec.n = n;
      rec.mode = peak.mode;
      rec.unique = peak.unique;
      rec.u_star = mode_estimate(n, theta_d);
      rec.frac = frac_part(rec.u_star);
      rec.nint = nearest_int(rec.u_star);
      rec.agrees = rec.mode == rec.nint;
      bucket->push_back(rec);
    };
  });
  DensityResult out;
  for (auto& part : parts)
    out.trace.insert(out.trace.end(), part.begin(), part.end());
  out.total = static_cast<long>(out.trace.size());
  for (const auto& rec : out.trace) out.agreements += rec.agrees ? 1 : 0;
  out.fraction =
      out.total > 0 ? static_cast<double>(out.agreements) / out.total : 0.0;
  return out;
}

DensityResult density_experiment(int N, double theta, int jobs) {
  return density_experiment(N, RationalTheta::from_double(theta), jobs);
}

CounterexampleResult counterexample_search(int N, const RationalTheta& theta,
                                           int jobs) {
  const double theta_d = theta.to_double();
  struct Part {
    std::vector<long> confirmed;
    long checked = 0;
  };
  std::vector<Part> parts(static_cast<std::size_t>(std::max(1, jobs)));
  parallel_sweep(N, theta, jobs, [&](int job) {
    auto* part = &parts[static_cast<std::size_t>(job)];
    return [part, theta, theta_d](const StirlingPrefixSweep& sweep, int n) {
      const double u = mode_estimate(n, theta_d);
      const double f = frac_part(u);
      const double band = 3.0 / std::log(static_cast<double>(n));
      if (!(f < 0.5 && f > 0.5 - band)) return;
      ++part->checked;
      const PeakResult peak =
          exact_peak(sweep, n, theta_d, theta.num(), theta.den());
      if (peak.mode != nearest_int(u)) part->confirmed.push_back(n);
    };
  });
  CounterexampleResult out;
  for (auto& part : parts) {
    out.confirmed.insert(out.confirmed.end(), part.confirmed.begin(),
                         part.confirmed.end());
    out.candidates_checked += part.checked;
  }
  return out;
}

CounterexampleResult counterexample_search(int N, double theta, int jobs) {
  return counterexample_search(N, RationalTheta::from_double(theta), jobs);
}

}  // namespace ewens
