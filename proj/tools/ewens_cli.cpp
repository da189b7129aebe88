// Command line front end: tables, sweeps, and experiments for the cycle
// count distribution.  Every command is a thin wrapper over the library;
// identical invocations produce byte-identical CSV files.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ewens/checks.hpp"
#include "ewens/csv.hpp"
#include "ewens/expansion.hpp"
#include "ewens/mode.hpp"
#include "ewens/pmf.hpp"
#include "ewens/rational.hpp"
#include "ewens/special_functions.hpp"
#include "ewens/stirling.hpp"
#include "ewens/sweeps.hpp"

namespace {

// "p/q" (or a bare integer) routes to the exact engines, a decimal string
// to the double engines; --precision exact/high forces the exact route by
// lifting the double to its dyadic rational.
struct ThetaArg {
  std::string text;
  bool rational_syntax = false;
  ewens::RationalTheta rational{1, 1};
  double value = 1.0;
};

ThetaArg resolve_theta(const std::string& text) {
  ThetaArg out;
  out.text = text;
  if (auto r = ewens::RationalTheta::parse(text)) {
    out.rational_syntax = true;
    out.rational = *r;
    out.value = r->to_double();
    return out;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("theta", "not a rational p/q or decimal: " + text);
  }
  if (used != text.size() || !std::isfinite(v) || v <= 0.0)
    throw CLI::ValidationError("theta", "needs a positive finite value: " + text);
  out.value = v;
  out.rational = ewens::RationalTheta::from_double(v);
  return out;
}

bool use_exact(const ThetaArg& theta, const std::string& precision) {
  if (precision == "double") return false;
  if (precision == "exact" || precision == "high") return true;
  return theta.rational_syntax;  // syntax decides by default
}

std::string theta_validator(const std::string& text) {
  if (ewens::RationalTheta::parse(text)) return {};
  std::size_t used = 0;
  try {
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v) && v > 0.0) return {};
  } catch (const std::exception&) {
  }
  return "theta must be p/q or a positive decimal, got '" + text + "'";
}

void maybe_write(const std::string& path, const std::string& content) {
  if (!path.empty()) ewens::write_text_file(path, content);
}

std::vector<int> grid_or_default(const std::vector<int>& ns) {
  return ns.empty() ? ewens::kSweepGrid : ns;
}

void print_mode_report(const ewens::ModeReport& rep, const std::string& t) {
  std::printf(
      "n=%d theta=%s mode_least=%ld unique=%d max_prob=%.17g u_star=%.17g "
      "nint=%ld frac=%.17g agrees=%d\n",
      rep.n, t.c_str(), rep.mode_least, rep.unique ? 1 : 0, rep.max_prob,
      rep.u_star, rep.nint, rep.frac, rep.agrees ? 1 : 0);
}

ewens::ModeAgreement to_agreement(const ewens::ModeReport& rep) {
  ewens::ModeAgreement row;
  row.n = rep.n;
  row.mode = rep.mode_least;
  row.unique = rep.unique;
  row.u_star = rep.u_star;
  row.frac = rep.frac;
  row.nint = rep.nint;
  row.agrees = rep.agrees;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic analysis of the Ewens cycle count"};
  app.require_subcommand(0, 1);

  bool seed_check = false;
  app.add_flag("--seed-check", seed_check,
               "run the built-in invariant suite and exit");

  // shared option storage; each subcommand binds the pieces it needs
  int n = 0, N = 0, r = 3, q = 2, j = 0, jobs = 1;
  double eta = 4.0;
  std::string theta_text = "1";
  std::string out_path;
  std::string precision = "auto";
  std::string csv_path, kind = "auto";
  std::vector<int> grid;
  std::vector<int> ks;

  const auto add_theta = [&](CLI::App* cmd) {
    cmd->add_option("--theta", theta_text,
                    "parameter, p/q for exact arithmetic or a decimal")
        ->check(theta_validator);
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "CSV output path");
  };
  const auto add_precision = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision,
                    "double, exact, or high (exact confirmation)")
        ->check(CLI::IsMember({"auto", "double", "exact", "high"}));
  };

  CLI::App* c_stirling =
      app.add_subcommand("stirling", "one row of cycle-count coefficients");
  c_stirling->add_option("--n", n, "row index")->required();
  add_out(c_stirling);

  CLI::App* c_pmf = app.add_subcommand("pmf", "distribution of the count");
  c_pmf->add_option("--n", n, "population size")->required();
  add_theta(c_pmf);
  add_precision(c_pmf);
  add_out(c_pmf);

  CLI::App* c_hj =
      app.add_subcommand("hj", "one correction polynomial of the expansion");
  c_hj->add_option("--j", j, "order of the correction")->required();
  add_theta(c_hj);
  add_out(c_hj);

  CLI::App* c_esweep = app.add_subcommand(
      "edgeworth-sweep", "sup pmf error of the truncated expansion");
  add_theta(c_esweep);
  c_esweep->add_option("--r", r, "largest order included");
  c_esweep->add_option("--n", grid, "grid of n values (repeatable)");
  add_out(c_esweep);

  CLI::App* c_csweep = app.add_subcommand(
      "cdf-sweep", "sup lattice error of the corrected normal cdf");
  add_theta(c_csweep);
  c_csweep->add_option("--n", grid, "grid of n values (repeatable)");
  add_out(c_csweep);

  CLI::App* c_largedev = app.add_subcommand(
      "largedev", "density approximation in the linear-k regime");
  c_largedev->add_option("--n", n, "population size")->required();
  c_largedev->add_option("--q", q, "largest order included");
  c_largedev->add_option("--k", ks, "k values (repeatable; default multiples of log n)");
  c_largedev->add_option("--eta", eta, "window half-ratio, k in (log n/eta, eta log n)");
  add_out(c_largedev);

  CLI::App* c_mode = app.add_subcommand("mode", "exact mode report");
  c_mode->add_option("--n", n, "population size")->required();
  add_theta(c_mode);
  add_precision(c_mode);
  add_out(c_mode);

  CLI::App* c_density = app.add_subcommand(
      "density", "agreement of the exact mode with the rounded location");
  c_density->add_option("--N", N, "scan n = 3..N")->required();
  add_theta(c_density);
  c_density->add_option("--jobs", jobs, "worker threads");
  add_out(c_density);

  CLI::App* c_counter = app.add_subcommand(
      "counterexample", "n where the mode misses the rounded location");
  c_counter->add_option("--N", N, "scan n = 3..N")->required();
  add_theta(c_counter);
  c_counter->add_option("--jobs", jobs, "worker threads");
  add_out(c_counter);

  CLI::App* c_maximum = app.add_subcommand(
      "maximum", "scaled peak height against its predicted form");
  add_theta(c_maximum);
  c_maximum->add_option("--n", grid, "grid of n values (repeatable)");
  add_out(c_maximum);

  CLI::App* c_plot = app.add_subcommand(
      "plot-script", "emit a plotting script for a CSV produced here");
  c_plot->add_option("--csv", csv_path, "input CSV")->required();
  c_plot->add_option("--kind", kind,
                     "edgeworth-sweep, cdf-sweep, density, maximum, or auto");
  c_plot->add_option("--out", out_path, "script path (default: CSV + .py)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (seed_check && app.get_subcommands().empty()) {
      const int failures = ewens::run_seed_check(std::cout);
      return failures == 0 ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::fputs(app.help().c_str(), stderr);
      return 2;
    }

    if (c_stirling->parsed()) {
      const ewens::StirlingRow row = ewens::stirling_first_row(n);
      if (n <= 12) {
        std::printf("row %d: [", n);
        for (int k = 1; k <= n; ++k)
          std::printf("%s%s", row.at(k).get_str().c_str(),
                      k < n ? ", " : "");
        std::printf("]\n");
      } else {
        std::printf("row %d: %d entries\n", n, n);
      }
      maybe_write(out_path, ewens::csv_stirling(row));
    } else if (c_pmf->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      if (use_exact(theta, precision)) {
        const ewens::ExactPmf pmf = ewens::ewens_pmf_exact(n, theta.rational);
        int mode = 1;
        for (int k = 2; k <= n; ++k)
          if (pmf.at(k) > pmf.at(mode)) mode = k;
        std::printf("pmf n=%d theta=%s exact entries=%d argmax=%d\n", n,
                    theta.rational.str().c_str(), n, mode);
        maybe_write(out_path, ewens::csv_pmf(pmf));
      } else {
        const ewens::FloatPmf pmf = ewens::ewens_pmf_float(n, theta.value);
        double mass = 0.0;
        int mode = 1;
        for (int k = n; k >= 1; --k) {
          mass += pmf.at(k);
          if (pmf.at(k) >= pmf.at(mode)) mode = k;
        }
        std::printf("pmf n=%d theta=%.17g entries=%d argmax=%d mass=%.17g\n",
                    n, theta.value, n, mode, mass);
        maybe_write(out_path, ewens::csv_pmf(pmf));
      }
    } else if (c_hj->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const ewens::RealPoly h = ewens::edgeworth_polynomial(j, theta.value);
      std::printf("H_%d at theta=%s:", j, theta_text.c_str());
      bool first = true;
      for (std::size_t p = 0; p < h.c.size(); ++p) {
        if (h.c[p] == 0.0) continue;
        std::printf("%s %.17g*x^%zu", first ? "" : " +", h.c[p], p);
        first = false;
      }
      if (first) std::printf(" 0");
      std::printf("\n");
      maybe_write(out_path, ewens::csv_polynomial(j, h));
    } else if (c_esweep->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const auto rows =
          ewens::edgeworth_error_sweep(grid_or_default(grid), theta.value, r);
      for (const auto& row : rows)
        std::printf("n=%d r=%d sup=%.6e scaled=%.6e\n", row.n, row.r,
                    row.sup_abs_err, row.scaled_err);
      maybe_write(out_path, ewens::csv_edgeworth_sweep(rows));
    } else if (c_csweep->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const auto rows =
          ewens::cdf_error_sweep(grid_or_default(grid), theta.value);
      for (const auto& row : rows)
        std::printf("n=%d sup=%.6e scaled=%.6e\n", row.n, row.sup_abs_err,
                    row.scaled_err);
      maybe_write(out_path, ewens::csv_cdf_sweep(rows));
    } else if (c_largedev->parsed()) {
      if (ks.empty()) {
        const double logn = std::log(static_cast<double>(n));
        for (int m = 1; m <= 3; ++m)
          ks.push_back(static_cast<int>(m * logn));
      }
      const auto rows = ewens::largedev_rows(n, ks, q, eta);
      for (const auto& row : rows)
        std::printf("k=%d q=%d exact=%.10e approx=%.10e rel_err=%.3e\n",
                    row.k, row.q, row.exact, row.approx, row.rel_err);
      maybe_write(out_path, ewens::csv_largedev(rows));
    } else if (c_mode->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const ewens::ModeReport rep =
          use_exact(theta, precision)
              ? ewens::exact_mode(n, theta.rational)
              : ewens::exact_mode(n, theta.value);
      print_mode_report(rep, theta_text);
      maybe_write(out_path, ewens::csv_mode_trace({to_agreement(rep)}));
    } else if (c_density->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const ewens::DensityResult res =
          theta.rational_syntax || precision == "exact" || precision == "high"
              ? ewens::density_experiment(N, theta.rational, jobs)
              : ewens::density_experiment(N, theta.value, jobs);
      std::printf("N=%d theta=%s agreements=%ld total=%ld fraction=%.17g\n",
                  N, theta_text.c_str(), res.agreements, res.total,
                  res.fraction);
      maybe_write(out_path, ewens::csv_mode_trace(res.trace));
    } else if (c_counter->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const ewens::CounterexampleResult res =
          theta.rational_syntax || precision == "exact" || precision == "high"
              ? ewens::counterexample_search(N, theta.rational, jobs)
              : ewens::counterexample_search(N, theta.value, jobs);
      std::printf("N=%d theta=%s candidates=%ld confirmed=%zu\n", N,
                  theta_text.c_str(), res.candidates_checked,
                  res.confirmed.size());
      std::vector<ewens::ModeAgreement> rows;
      for (long cn : res.confirmed) {
        std::printf("  n=%ld\n", cn);
        rows.push_back(to_agreement(ewens::exact_mode(
            static_cast<int>(cn),
            theta.rational_syntax ? theta.rational
                                  : ewens::RationalTheta::from_double(
                                        theta.value))));
      }
      maybe_write(out_path, ewens::csv_mode_trace(rows));
    } else if (c_maximum->parsed()) {
      const ThetaArg theta = resolve_theta(theta_text);
      const auto rows =
          ewens::maximum_rows(grid_or_default(grid), theta.rational);
      for (const auto& row : rows)
        std::printf(
            "n=%d scaled_max=%.12g prediction=%.12g residual=%.3e "
            "residual_logn=%.3e\n",
            row.n, row.scaled_max, row.prediction, row.residual,
            row.residual_logn);
      maybe_write(out_path, ewens::csv_maximum(rows));
    } else if (c_plot->parsed()) {
      const std::string script = ewens::plot_script(csv_path, kind);
      const std::string path =
          out_path.empty() ? csv_path + ".py" : out_path;
      ewens::write_text_file(path, script);
      std::printf("wrote %s\n", path.c_str());
    }

    if (seed_check) {
      const int failures = ewens::run_seed_check(std::cout);
      if (failures != 0) return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
