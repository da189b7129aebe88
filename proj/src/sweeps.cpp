#include "ewens/sweeps.hpp"

#include <cmath>
#include <cstdlib>

#include "ewens/expansion.hpp"
#include "ewens/mode.hpp"
#include "ewens/pmf.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

std::vector<EdgeworthErrorRow> edgeworth_error_sweep(
    const std::vector<int>& ns, double theta, int r_max) {
  std::vector<EdgeworthErrorRow> rows;
  for (int n : ns) {
    const FloatPmf exact = ewens_pmf_float(n, theta);
    const double logn = std::log(static_cast<double>(n));
    for (int r = 0; r <= r_max; ++r) {
      const std::vector<double> approx = edgeworth_pmf_table(n, theta, r);
      double sup = 0.0;
      for (int k = 1; k <= n; ++k)
        sup = std::max(sup, std::fabs(exact.at(k) -
                                      approx[static_cast<std::size_t>(k) - 1]));
      EdgeworthErrorRow row;
      row.n = n;
      row.r = r;
      row.sup_abs_err = sup;
      row.scaled_err = sup * std::pow(logn, 0.5 * (r + 1));
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<CdfErrorRow> cdf_error_sweep(const std::vector<int>& ns,
                                         double theta) {
  std::vector<CdfErrorRow> rows;
  for (int n : ns) {
    const FloatPmf pmf = ewens_pmf_float(n, theta);
    const std::vector<double> cdf = cdf_from_pmf(pmf);
    const double w = theta * std::log(static_cast<double>(n));
    const double root_w = std::sqrt(w);
    double sup = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double x = (k - w) / root_w;
      if (std::fabs(x) > 3.0) continue;
      sup = std::max(sup, std::fabs(cdf[static_cast<std::size_t>(k) - 1] -
                                    edgeworth_cdf(n, theta, x)));
    }
    CdfErrorRow row;
    row.n = n;
    row.sup_abs_err = sup;
    row.scaled_err = sup * std::log(static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

std::vector<LargeDevRow> largedev_rows(int n, const std::vector<int>& ks,
                                       int q_max, double eta) {
  const StirlingRow row = stirling_first_row(n);
  const mpz_class nfact = factorial(n);
  std::vector<LargeDevRow> rows;
  for (int k : ks) {
    mpq_class exact_q(row.at(k), nfact);
    exact_q.canonicalize();
    const double exact = exact_q.get_d();
    for (int q = 0; q <= q_max; ++q) {
      LargeDevRow r;
      r.k = k;
      r.q = q;
      r.exact = exact;
      r.approx = large_deviation_density(n, k, q, eta);
      r.rel_err = r.approx / exact - 1.0;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<MaximumRow> maximum_rows(const std::vector<int>& ns,
                                     const RationalTheta& theta) {
  std::vector<MaximumRow> rows;
  const double theta_d = theta.to_double();
  for (int n : ns) {
    MaximumRow row;
    row.n = n;
    row.scaled_max = exact_scaled_maximum(n, theta);
    row.prediction = maximum_prediction(n, theta_d);
    row.residual = row.scaled_max - row.prediction;
    row.residual_logn = row.residual * std::log(static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ewens
