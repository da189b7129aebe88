#pragma once

#include <string>
#include <vector>

#include "ewens/mode.hpp"
#include "ewens/pmf.hpp"
#include "ewens/polynomial.hpp"
#include "ewens/stirling.hpp"

namespace ewens {

// All CSV output is built through these writers so that a re-run with the
// same configuration reproduces files byte for byte: fixed column order,
// '\n' line ends, floats at 17 significant digits, exact rationals as
// "num/den".
std::string format_double(double v);

std::string csv_stirling(const StirlingRow& row);          // k,value
std::string csv_pmf(const ExactPmf& pmf);                  // k,prob
std::string csv_pmf(const FloatPmf& pmf);                  // k,prob
std::string csv_polynomial(int j, const RealPoly& h);      // j,power,coefficient
std::string csv_mode_trace(const std::vector<ModeAgreement>& rows);
// n,mode,unique,u_star,frac,nint,agrees  (booleans as 0/1)

struct EdgeworthErrorRow {
  int n = 0;
  int r = 0;
  double sup_abs_err = 0.0;
  double scaled_err = 0.0;  // sup * (log n)^{(r+1)/2}
};
std::string csv_edgeworth_sweep(const std::vector<EdgeworthErrorRow>& rows);

struct CdfErrorRow {
  int n = 0;
  double sup_abs_err = 0.0;
  double scaled_err = 0.0;  // sup * log n
};
std::string csv_cdf_sweep(const std::vector<CdfErrorRow>& rows);

struct LargeDevRow {
  int k = 0;
  int q = 0;
  double exact = 0.0;
  double approx = 0.0;
  double rel_err = 0.0;
};
std::string csv_largedev(const std::vector<LargeDevRow>& rows);

struct MaximumRow {
  int n = 0;
  double scaled_max = 0.0;   // sqrt(2 pi w) * M_n, exact M_n
  double prediction = 0.0;   // maximum_prediction(n, theta)
  double residual = 0.0;     // scaled_max - prediction
  double residual_logn = 0.0;
};
std::string csv_maximum(const std::vector<MaximumRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

// Emits a small matplotlib script that plots a CSV produced by one of the
// writers above.  kind is one of "edgeworth-sweep", "cdf-sweep", "density",
// "maximum", or "auto" to detect from the header; unknown schemas are
// rejected.  The script is written next to the data, never executed here.
std::string plot_script(const std::string& csv_path, const std::string& kind);
std::string detect_plot_kind(const std::string& header_line);

}  // namespace ewens
