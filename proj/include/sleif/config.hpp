#pragma once

#include <optional>
#include <string>

#include "sleif/profile.hpp"
#include "sleif/spectral.hpp"
#include "sleif/weyl.hpp"

namespace sleif {

/// Configuration problem (bad file, bad key, bad value); carries the
/// offending line when parsed from a file.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One solver run.  Defaults mirror the reference setup: 2000 mesh points,
/// 120 coefficients, rho scanned over [0, 200] with 500 points.
struct RunConfig {
  std::string profile = "example1";
  std::optional<PiecewisePolynomial> piecewise;  // when profile == "piecewise"
  double length = 0.0;                           // 0 = profile default
  int mesh_points = 2000;
  int coefficient_count = 120;  // truncation order N
  double rho_max = 200.0;
  int scan_points = 500;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  int eigenfunction_count = 10;
  WeylGridSpec weyl;
  std::string output_dir = ".";

  double resolved_length() const;
  ConductivityProfile resolve_profile() const;
};

/// Key = value file with '#' comments; the piecewise spec uses one
/// `breakpoints` line and one `piece` line per polynomial piece.  Unknown
/// keys are rejected with a line diagnostic.
RunConfig parse_config_file(const std::string& path);

/// Same grammar, from an in-memory string (used by tests).
RunConfig parse_config_text(const std::string& text);

BoundaryCondition parse_boundary_condition(const std::string& name);

}  // namespace sleif
