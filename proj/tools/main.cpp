#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cylbif/cli.hpp"

namespace {

struct Flags {
  int n = 1;
  double t_min = 0.2;
  double t_max = 3.0;
  int points = 0;
  std::string out = "-";
  std::string format = "auto";
  std::optional<double> period;
  int k = 1;
  double eps = 1e-3;
  int nr = 128;
  int nt = 32;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace cylbif::cli;
  CLI::App app{"cylbif: dispersion, bifurcation periods and perturbed-cylinder checks"};
  app.require_subcommand(1);
  Flags f;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", f.n, "space dimension N of the cross-section (1..12)");
    sub->add_option("--out", f.out, "output path, '-' for stdout");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"auto", "csv", "json"}));
  };
  const auto scan = [&](CLI::App* sub) {
    sub->add_option("--t-min", f.t_min, "smallest period");
    sub->add_option("--t-max", f.t_max, "largest period");
    sub->add_option("--points", f.points, "number of grid points");
  };
  const auto cylinder = [&](CLI::App* sub) {
    sub->add_option("--T", f.period, "period (default: T_*)");
    sub->add_option("--k", f.k, "perturbation mode");
    sub->add_option("--eps", f.eps, "perturbation amplitude");
    sub->add_option("--nr", f.nr, "radial grid intervals (>= 64)");
    sub->add_option("--nt", f.nt, "angular grid points (even, >= 16)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "ball spectrum and phi_2 boundary data");
  common(spectrum);
  auto* sigma_scan = app.add_subcommand("sigma-scan", "sigma(T) on a uniform period grid");
  common(sigma_scan);
  scan(sigma_scan);
  auto* bifurcate = app.add_subcommand("bifurcate", "bifurcation periods and their certificates");
  common(bifurcate);
  auto* oracle = app.add_subcommand("oracle-diff", "dispersion formula vs. shooting oracle");
  common(oracle);
  scan(oracle);
  oracle->add_option("--k", f.k, "Fourier mode");
  auto* turan = app.add_subcommand("turan", "Turan margin scan on (0, sqrt(lambda2))");
  common(turan);
  turan->add_option("--points", f.points, "number of grid points");
  auto* perturb = app.add_subcommand("perturb", "Neumann deviation F(v, T) on a perturbed cylinder");
  common(perturb);
  cylinder(perturb);
  auto* nodal = app.add_subcommand("nodal", "nodal line r(t) of the second eigenfunction");
  common(nodal);
  cylinder(nodal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  RunConfig cfg;
  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  cfg.n_dim = f.n;
  cfg.t_min = f.t_min;
  cfg.t_max = f.t_max;
  if (f.points != 0) cfg.n_points = f.points;
  cfg.out_path = f.out;
  cfg.format = f.format == "csv" ? Format::Csv : f.format == "json" ? Format::Json : Format::Auto;
  cfg.period = f.period;
  cfg.k = f.k;
  cfg.eps = f.eps;
  cfg.n_r = f.nr;
  cfg.n_t = f.nt;
  return run(cfg);
}
