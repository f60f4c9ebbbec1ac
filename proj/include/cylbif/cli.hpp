#pragma once

// Command implementations behind the cylbif executable. Each command writes one
// CSV or JSON artifact; run() maps failures to exit codes
// (0 ok, 2 invalid input, 3 numerical failure).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cylbif/bifurcation.hpp"
#include "cylbif/cylinder.hpp"
#include "cylbif/dispersion.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/inequalities.hpp"
#include "cylbif/radial_ode.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif::cli {

enum class Command { Spectrum, SigmaScan, Bifurcate, OracleDiff, Turan, Perturb, Nodal };
enum class Format { Auto, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  Command command = Command::Spectrum;
  int n_dim = 1;
  double t_min = 0.2;
  double t_max = 3.0;
  std::optional<int> n_points;  // command default when absent
  std::string out_path = "-";
  Format format = Format::Auto;
  // perturbed-cylinder commands
  std::optional<double> period;
  int k = 1;
  double eps = 1e-3;
  int n_r = 128;
  int n_t = 32;
};

inline std::optional<Command> parse_command(const std::string& s) {
  if (s == "spectrum") return Command::Spectrum;
  if (s == "sigma-scan") return Command::SigmaScan;
  if (s == "bifurcate") return Command::Bifurcate;
  if (s == "oracle-diff") return Command::OracleDiff;
  if (s == "turan") return Command::Turan;
  if (s == "perturb") return Command::Perturb;
  if (s == "nodal") return Command::Nodal;
  return std::nullopt;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline Format resolve(Format f, Format fallback) { return f == Format::Auto ? fallback : f; }

inline int points(const RunConfig& c, int fallback) { return c.n_points.value_or(fallback); }

inline void validate(const RunConfig& c) {
  check_dimension(c.n_dim);
  if (c.n_points && *c.n_points < 2) throw DomainError("--points must be >= 2");
  if (!(c.t_min > 0.0) || !std::isfinite(c.t_min)) throw DomainError("--t-min must be positive");
  if (!(c.t_max > c.t_min) || !std::isfinite(c.t_max)) throw DomainError("--t-max must exceed --t-min");
  if (c.k < 1) throw DomainError("--k must be >= 1");
}

inline std::vector<double> grid(const RunConfig& c, int fallback) {
  const int n = points(c, fallback);
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(c.t_min + (c.t_max - c.t_min) * i / (n - 1));
  return g;
}

inline void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

inline void cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const auto b = ball_spectrum(c.n_dim);
  if (resolve(c.format, Format::Json) == Format::Csv) {
    out << "n,nu,lambda1,lambda2,j1,j2,dphi2,d2phi2,norm_const\n";
    out << b.n << "," << fmt(b.nu) << "," << fmt(b.lambda1) << "," << fmt(b.lambda2) << "," << fmt(b.j1) << ","
        << fmt(b.j2) << "," << fmt(b.dphi2) << "," << fmt(b.d2phi2) << "," << fmt(b.norm_const) << "\n";
    return;
  }
  auto j = to_json(b);
  j["schema"] = 1;
  write_json(out, j);
}

inline void cmd_sigma_scan(const RunConfig& c, std::ostream& out) {
  const auto b = ball_spectrum(c.n_dim);
  const auto sc = structural_constants(b);
  std::vector<DispersionPoint> pts;
  for (const double T : grid(c, 500)) {
    if (near_singular(sc, T)) continue;
    pts.push_back(sigma(b, T));
  }
  if (resolve(c.format, Format::Csv) == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : pts)
      rows.push_back({{"T", p.T}, {"sigma", p.sigma}, {"branch", to_string(p.branch)}, {"arg", p.arg}});
    write_json(out, {{"schema", 1}, {"n", b.n}, {"mu", sc.mu}, {"delta", sc.delta}, {"points", rows}});
    return;
  }
  out << "T,sigma,branch,arg\n";
  for (const auto& p : pts) out << fmt(p.T) << "," << fmt(p.sigma) << "," << to_string(p.branch) << "," << fmt(p.arg) << "\n";
}

inline void cmd_bifurcate(const RunConfig& c, std::ostream& out) {
  const auto r = analyze_bifurcation(ball_spectrum(c.n_dim));
  if (resolve(c.format, Format::Json) == Format::Csv) {
    out << "n,t_star,t_upper_star,dsigma_star,dsigma_upper,resonance_m,kernel_dim_star,kernel_dim_upper\n";
    out << r.n << "," << fmt(r.t_star) << "," << fmt(r.t_upper_star) << "," << fmt(r.sigma_prime_at_star) << ","
        << fmt(r.sigma_prime_at_upper) << "," << (r.resonance_m ? std::to_string(*r.resonance_m) : "") << ","
        << r.kernel_dim_at_star << "," << r.kernel_dim_at_upper << "\n";
    return;
  }
  write_json(out, to_json(r));
}

inline void cmd_oracle_diff(const RunConfig& c, std::ostream& out) {
  const auto b = ball_spectrum(c.n_dim);
  const auto sc = structural_constants(b);
  struct Row {
    double T, disp, shoot, diff;
  };
  std::vector<Row> rows;
  double worst = 0.0;
  for (const double T : grid(c, 40)) {
    if (near_singular(sc, T / c.k)) continue;
    const auto s = shoot_regular(b, c.k, T);
    if (s.resonant) continue;
    const double d = sigma_k(b, c.k, T);
    const double rel = std::abs(d - s.sigma_value) / (1.0 + std::abs(d));
    worst = std::max(worst, rel);
    rows.push_back({T, d, s.sigma_value, rel});
  }
  if (resolve(c.format, Format::Csv) == Format::Json) {
    write_json(out, {{"schema", 1}, {"n", b.n}, {"k", c.k}, {"points", rows.size()}, {"max_rel_diff", worst}});
    return;
  }
  out << "T,sigma_dispersion,sigma_shooting,rel_diff\n";
  for (const auto& r : rows) out << fmt(r.T) << "," << fmt(r.disp) << "," << fmt(r.shoot) << "," << fmt(r.diff) << "\n";
}

inline void cmd_turan(const RunConfig& c, std::ostream& out) {
  const auto b = ball_spectrum(c.n_dim);
  const int n = points(c, 100000);
  const Order nu(b.nu);
  if (resolve(c.format, Format::Json) == Format::Csv) {
    out << "s,margin\n";
    for (int i = 1; i <= n; ++i) {
      const double s = b.j2 * i / (n + 1);
      out << fmt(s) << "," << fmt(turan_margin(nu, s)) << "\n";
    }
    return;
  }
  const auto r = turan_margin_scan(b, 0.0, b.j2, n);
  write_json(out, {{"schema", 1},
                   {"n", b.n},
                   {"nu", r.nu},
                   {"interval", {r.lo, r.hi}},
                   {"n_points", r.n_points},
                   {"min_margin", r.min_margin},
                   {"argmin", r.argmin},
                   {"passed", r.passed}});
}

inline CylinderProblem perturbed_problem(const RunConfig& c) {
  CylinderProblem p;
  p.n = c.n_dim;
  if (c.period) {
    p.T = *c.period;
  } else {
    p.T = find_T_star(ball_spectrum(c.n_dim)).root;
  }
  p.v_coeffs = {{c.k, c.eps}};
  p.n_r = c.n_r;
  p.n_t = c.n_t;
  return p;
}

inline void cmd_perturb(const RunConfig& c, std::ostream& out) {
  const auto p = perturbed_problem(c);
  const auto res = solve_lambda2(p);
  const auto F = neumann_deviation(res, p);
  if (resolve(c.format, Format::Csv) == Format::Json) {
    std::vector<std::pair<double, double>> scaled;
    double fmax = 0.0;
    for (const auto& [t, f] : F) {
      scaled.emplace_back(t, c.eps != 0.0 ? f / c.eps : 0.0);
      fmax = std::max(fmax, std::abs(f));
    }
    const auto b = ball_spectrum(p.n);
    write_json(out, {{"schema", 1},
                     {"n", p.n},
                     {"T", p.T},
                     {"k", c.k},
                     {"eps", c.eps},
                     {"n_r", p.n_r},
                     {"n_t", p.n_t},
                     {"lambda2v", res.lambda2v},
                     {"residual_norm", res.residual_norm},
                     {"f_max", fmax},
                     {"mode_amplitude", c.eps != 0.0 ? nlohmann::json(cosine_mode(scaled, c.k)) : nlohmann::json(nullptr)},
                     {"sigma_k", sigma_k(b, c.k, p.T)}});
    return;
  }
  out << "t,F\n";
  for (const auto& [t, f] : F) out << fmt(t) << "," << fmt(f) << "\n";
}

inline void cmd_nodal(const RunConfig& c, std::ostream& out) {
  const auto p = perturbed_problem(c);
  const auto res = solve_lambda2(p);
  const auto curve = nodal_line(res, p);
  if (resolve(c.format, Format::Csv) == Format::Json) {
    double lo = curve.front().second, hi = lo, sum = 0.0;
    for (const auto& [t, r] : curve) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      sum += r;
    }
    write_json(out, {{"schema", 1},
                     {"n", p.n},
                     {"T", p.T},
                     {"count", curve.size()},
                     {"r_min", lo},
                     {"r_max", hi},
                     {"r_mean", sum / static_cast<double>(curve.size())},
                     {"lambda2v", res.lambda2v}});
    return;
  }
  out << "t,r\n";
  for (const auto& [t, r] : curve) out << fmt(t) << "," << fmt(r) << "\n";
}

}  // namespace detail

/// Runs one command; the artifact goes to `out` when --out is "-".
inline int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    detail::validate(config);
    std::ostringstream buf;
    switch (config.command) {
      case Command::Spectrum: detail::cmd_spectrum(config, buf); break;
      case Command::SigmaScan: detail::cmd_sigma_scan(config, buf); break;
      case Command::Bifurcate: detail::cmd_bifurcate(config, buf); break;
      case Command::OracleDiff: detail::cmd_oracle_diff(config, buf); break;
      case Command::Turan: detail::cmd_turan(config, buf); break;
      case Command::Perturb: detail::cmd_perturb(config, buf); break;
      case Command::Nodal: detail::cmd_nodal(config, buf); break;
    }
    if (config.out_path == "-") {
      out << buf.str();
      out.flush();
    } else {
      std::ofstream f(config.out_path, std::ios::binary);
      if (!f) {
        err << "error: cannot open output file " << config.out_path << "\n";
        return kExitInvalid;
      }
      f << buf.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical_failure(e) ? kExitNumerical : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace cylbif::cli
