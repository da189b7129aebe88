#pragma once

#include <vector>

#include "ewens/csv.hpp"
#include "ewens/rational.hpp"

namespace ewens {

// Default grid for the asymptotic desk checks.
inline const std::vector<int> kSweepGrid{1000, 10000, 20000};

// Sup over k = 1..n of |P{K_n = k} - order-r approximation|, together with
// the (log n)^((r+1)/2) scaling that the error law says must shrink.
// One convolution PMF is shared across all orders 0..r_max.
std::vector<EdgeworthErrorRow> edgeworth_error_sweep(
    const std::vector<int>& ns, double theta, int r_max);

// Sup over the grid points x_k = (k - w)/sqrt(w), |x_k| <= 3, of the
// distance between the exact CDF and the corrected normal approximation.
std::vector<CdfErrorRow> cdf_error_sweep(const std::vector<int>& ns,
                                         double theta);

// Ratio checks of the large-deviation formula against exact cycle-count
// probabilities at theta = 1 (big-integer row over n!).
std::vector<LargeDevRow> largedev_rows(int n, const std::vector<int>& ks,
                                       int q_max, double eta = 4.0);

// Exact scaled peak height vs its predicted second-order form.
std::vector<MaximumRow> maximum_rows(const std::vector<int>& ns,
                                     const RationalTheta& theta);

}  // namespace ewens
