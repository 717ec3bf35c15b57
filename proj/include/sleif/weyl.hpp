#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "sleif/spectral.hpp"

namespace sleif {

/// Thrown when a Weyl-function evaluation point sits inside the exclusion
/// radius of a known real eigenvalue.
class pole_proximity_error : public std::runtime_error {
 public:
  pole_proximity_error(const std::string& what, double nearest)
      : std::runtime_error(what), nearest_eigenvalue(nearest) {}
  double nearest_eigenvalue;
};

/// Relative exclusion radius around a real eigenvalue.
inline double pole_exclusion_radius(double eigenvalue) {
  return 1e-3 * (1.0 + std::abs(eigenvalue));
}

/// M(lambda) = C(rho, L) / S(rho, L) with rho the principal square root of
/// lambda (Re rho >= 0, Im rho >= 0 on the cut); both series are even in rho,
/// so the branch choice cannot matter.  When `poles` is non-empty, points
/// within the exclusion radius of a listed eigenvalue raise
/// pole_proximity_error.
std::complex<double> weyl_dirichlet(const NsbfCoefficientTable& table,
                                    std::complex<double> lambda, int terms,
                                    std::span<const double> poles = {});

/// M_N(mu) = -(1/mu) M^D_{1/kappa}(mu); mu = 0 is always a pole.
std::complex<double> weyl_neumann(const NsbfCoefficientTable& table,
                                  const NsbfCoefficientTable& reciprocal,
                                  std::complex<double> mu, int terms,
                                  std::span<const double> poles = {});

struct WeylGridSpec {
  double re_min = -10.0, re_max = 10.0;
  double im_min = 0.0, im_max = 10.0;
  int n_re = 201, n_im = 101;
};

struct WeylGrid {
  WeylGridSpec spec;
  std::vector<std::complex<double>> values;  // row-major, [i_im * n_re + i_re]
  std::vector<unsigned char> near_pole;      // 1 where evaluation was skipped
  std::vector<double> poles;                 // eigenvalues inside the re-range
};

/// Evaluates the Dirichlet or Neumann Weyl function over a complex-lambda
/// rectangle.  Eigenvalues are located internally and annotate the grid;
/// nodes within the exclusion radius of one are marked instead of evaluated.
WeylGrid weyl_grid(const NsbfCoefficientTable& table,
                   const NsbfCoefficientTable& reciprocal,
                   const WeylGridSpec& spec, BoundaryCondition kind,
                   int terms);

/// Residue of M^D at an eigenvalue by the first-order limit
/// eps * M(lambda_n + eps) over a geometric eps sequence with Richardson
/// extrapolation.  Equals 1/beta_n.
double weyl_dirichlet_residue(const NsbfCoefficientTable& table,
                              double lambda_n, int terms);

}  // namespace sleif
