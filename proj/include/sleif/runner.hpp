#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sleif/config.hpp"

namespace sleif {

/// Files written by a run, with content hashes for the manifest.
struct RunArtifacts {
  std::vector<std::string> files;
};

/// coeffs: sigma table CSV (x, sigma_0..sigma_N).
RunArtifacts run_coeffs(const RunConfig& cfg);

/// eigs: eigenvalue CSV (n, rho_n, lambda_n, beta_n, residual); optionally
/// the first eigenfunction_count normalized eigenfunctions (x, phi_1..phi_k).
RunArtifacts run_eigs(const RunConfig& cfg, bool with_eigenfunctions);

/// weyl: grid CSV (re_lambda, im_lambda, re_M, im_M, near_pole_flag), a
/// real-axis slice CSV and the pole annotations.
RunArtifacts run_weyl(const RunConfig& cfg);

/// verify: golden suite; one pass/fail line per check.  Returns true when
/// every check passes.
bool run_verify(std::ostream& out);

}  // namespace sleif
