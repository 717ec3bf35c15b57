#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sleif/runner.hpp"

namespace {

// Exit codes: 0 success, 1 config error, 2 numerical failure,
// 3 verification failure.
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;
constexpr int kVerifyFailure = 3;

struct Flags {
  std::string config;
  std::string profile;
  std::string bc;
  std::string out;
  double length = 0.0;
  double rho_max = 0.0;
  int mesh_points = 0;
  int coefficients = 0;
  int scan_points = 0;
  int eigenfunctions = -1;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "configuration file (key = value)");
  cmd->add_option("--profile", f.profile,
                  "builtin profile: unit, example1, triangular");
  cmd->add_option("--L", f.length, "interval length (builtin default if omitted)");
  cmd->add_option("--mesh-points", f.mesh_points, "requested mesh nodes");
  cmd->add_option("--N", f.coefficients, "series truncation order");
  cmd->add_option("--rho-max", f.rho_max, "spectral scan upper bound");
  cmd->add_option("--scan-points", f.scan_points, "spectral scan resolution");
  cmd->add_option("--bc", f.bc,
                  "dirichlet | neumann | dirichlet-neumann | neumann-dirichlet");
  cmd->add_option("--eigenfunctions", f.eigenfunctions,
                  "how many eigenfunctions to export");
  cmd->add_option("--out", f.out, "output directory");
}

sleif::RunConfig build_config(const Flags& f) {
  sleif::RunConfig cfg;
  if (!f.config.empty()) cfg = sleif::parse_config_file(f.config);
  if (!f.profile.empty()) cfg.profile = f.profile;
  if (f.length != 0.0) cfg.length = f.length;
  if (f.mesh_points != 0) cfg.mesh_points = f.mesh_points;
  if (f.coefficients != 0) cfg.coefficient_count = f.coefficients;
  if (f.rho_max != 0.0) cfg.rho_max = f.rho_max;
  if (f.scan_points != 0) cfg.scan_points = f.scan_points;
  if (!f.bc.empty()) cfg.bc = sleif::parse_boundary_condition(f.bc);
  if (f.eigenfunctions >= 0) cfg.eigenfunction_count = f.eigenfunctions;
  if (!f.out.empty()) cfg.output_dir = f.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver for -(kappa u')' = lambda kappa u on [0, L]"};
  app.require_subcommand(1);

  Flags flags;
  auto* coeffs = app.add_subcommand("coeffs", "export the coefficient table");
  auto* eigs = app.add_subcommand("eigs", "compute eigenvalues");
  auto* eigfun = app.add_subcommand("eigfun",
                                    "compute eigenvalues and eigenfunctions");
  auto* weyl = app.add_subcommand("weyl", "sample the Weyl function");
  auto* verify = app.add_subcommand("verify", "run the golden check suite");
  for (auto* cmd : {coeffs, eigs, eigfun, weyl})
    add_common_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (verify->parsed()) return sleif::run_verify(std::cout) ? kOk : kVerifyFailure;
    const sleif::RunConfig cfg = build_config(flags);
    if (coeffs->parsed()) sleif::run_coeffs(cfg);
    if (eigs->parsed()) sleif::run_eigs(cfg, false);
    if (eigfun->parsed()) sleif::run_eigs(cfg, true);
    if (weyl->parsed()) sleif::run_weyl(cfg);
    return kOk;
  } catch (const sleif::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }
}
