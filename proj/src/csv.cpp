#include "ewens/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ewens {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string csv_stirling(const StirlingRow& row) {
  std::string out = "k,value\n";
  for (int k = 1; k <= row.n; ++k) {
    out += std::to_string(k);
    out += ',';
    out += row.at(k).get_str();
    out += '\n';
  }
  return out;
}

std::string csv_pmf(const ExactPmf& pmf) {
  std::string out = "k,prob\n";
  for (int k = 1; k <= pmf.n; ++k) {
    out += std::to_string(k);
    out += ',';
    out += rational_str(pmf.at(k));
    out += '\n';
  }
  return out;
}

std::string csv_pmf(const FloatPmf& pmf) {
  std::string out = "k,prob\n";
  for (int k = 1; k <= pmf.n; ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(pmf.at(k));
    out += '\n';
  }
  return out;
}

std::string csv_polynomial(int j, const RealPoly& h) {
  // one row per monomial actually present; parity zeros carry no rows
  std::string out = "j,power,coefficient\n";
  for (std::size_t power = 0; power < h.c.size(); ++power) {
    if (h.c[power] == 0.0) continue;
    out += std::to_string(j);
    out += ',';
    out += std::to_string(power);
    out += ',';
    out += format_double(h.c[power]);
    out += '\n';
  }
  return out;
}

std::string csv_mode_trace(const std::vector<ModeAgreement>& rows) {
  std::string out = "n,mode,unique,u_star,frac,nint,agrees\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.mode);
    out += ',';
    out += r.unique ? '1' : '0';
    out += ',';
    out += format_double(r.u_star);
    out += ',';
    out += format_double(r.frac);
    out += ',';
    out += std::to_string(r.nint);
    out += ',';
    out += r.agrees ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string csv_edgeworth_sweep(const std::vector<EdgeworthErrorRow>& rows) {
  std::string out = "n,r,sup_abs_err,scaled_err\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.r);
    out += ',';
    out += format_double(r.sup_abs_err);
    out += ',';
    out += format_double(r.scaled_err);
    out += '\n';
  }
  return out;
}

std::string csv_cdf_sweep(const std::vector<CdfErrorRow>& rows) {
  std::string out = "n,sup_abs_err,scaled_err\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.sup_abs_err);
    out += ',';
    out += format_double(r.scaled_err);
    out += '\n';
  }
  return out;
}

std::string csv_largedev(const std::vector<LargeDevRow>& rows) {
  std::string out = "k,q,exact,approx,rel_err\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.q);
    out += ',';
    out += format_double(r.exact);
    out += ',';
    out += format_double(r.approx);
    out += ',';
    out += format_double(r.rel_err);
    out += '\n';
  }
  return out;
}

std::string csv_maximum(const std::vector<MaximumRow>& rows) {
  std::string out = "n,scaled_max,prediction,residual,residual_logn\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.scaled_max);
    out += ',';
    out += format_double(r.prediction);
    out += ',';
    out += format_double(r.residual);
    out += ',';
    out += format_double(r.residual_logn);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("short write to " + path);
}

namespace {

const char* plot_body(const std::string& kind) {
  if (kind == "edgeworth-sweep")
    return
        "for r, grp in df.groupby('r'):\n"
        "    plt.plot(np.log(grp['n']), grp['scaled_err'], marker='o',\n"
        "             label=f'order {r}')\n"
        "plt.xlabel('log n')\n"
        "plt.ylabel('scaled sup error')\n"
        "plt.yscale('log')\n"
        "plt.legend()\n"
        "plt.title('local expansion error, scaled')\n";
  if (kind == "cdf-sweep")
    return
        "plt.plot(np.log(df['n']), df['scaled_err'], marker='o')\n"
        "plt.xlabel('log n')\n"
        "plt.ylabel('sup |F_exact - F_approx| * log n')\n"
        "plt.title('corrected normal approximation to the CDF')\n";
  if (kind == "density")
    return
        "agree = df['agrees'].rolling(100, min_periods=1).mean()\n"
        "plt.plot(df['n'], agree)\n"
        "plt.xlabel('n')\n"
        "plt.ylabel('rolling agreement freq')\n"
        "plt.ylim(0, 1.05)\n"
        "plt.title('mode vs rounded estimate')\n";
  if (kind == "maximum")
    return
        "plt.plot(np.log(df['n']), df['residual_logn'], marker='o')\n"
        "plt.xlabel('log n')\n"
        "plt.ylabel('(scaled max - prediction) * log n')\n"
        "plt.title('peak height prediction residual')\n";
  throw std::invalid_argument("no plot template for kind '" + kind + "'");
}

}  // namespace

std::string detect_plot_kind(const std::string& header_line) {
  if (header_line == "n,r,sup_abs_err,scaled_err") return "edgeworth-sweep";
  if (header_line == "n,sup_abs_err,scaled_err") return "cdf-sweep";
  if (header_line == "n,mode,unique,u_star,frac,nint,agrees") return "density";
  if (header_line == "n,scaled_max,prediction,residual,residual_logn")
    return "maximum";
  throw std::invalid_argument("unrecognized CSV schema: " + header_line);
}

std::string plot_script(const std::string& csv_path, const std::string& kind) {
  std::string resolved = kind;
  if (kind == "auto") {
    std::ifstream f(csv_path);
    if (!f) throw std::runtime_error("cannot open " + csv_path);
    std::string header;
    std::getline(f, header);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    resolved = detect_plot_kind(header);
  }
  std::string body = plot_body(resolved);
  std::string script =
      "#!/usr/bin/env python3\n"
      "# Auto-generated plotting companion; run manually, e.g.\n"
      "#   python3 <this file>\n"
      "import matplotlib\n"
      "matplotlib.use('Agg')\n"
      "import matplotlib.pyplot as plt\n"
      "import numpy as np\n"
      "import pandas as pd\n"
      "\n"
      "df = pd.read_csv('" + csv_path + "')\n";
  script += body;
  script += "plt.tight_layout()\nplt.savefig('" + csv_path +
            ".png', dpi=150)\nprint('wrote " + csv_path + ".png')\n";
  return script;
}

}  // namespace ewens
