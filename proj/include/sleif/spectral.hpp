#pragma once

#include <string>
#include <vector>

#include "sleif/nsbf.hpp"

namespace sleif {

/// The four built-in separated boundary conditions and their characteristic
/// functions of rho:
///   Dirichlet          u(0)=u(L)=0    S(rho, L)
///   Neumann            u'(0)=u'(L)=0  C'(rho, L)
///   DirichletNeumann   u(0)=u'(L)=0   S'(rho, L)
///   NeumannDirichlet   u'(0)=u(L)=0   C(rho, L)
enum class BoundaryCondition { Dirichlet, Neumann, DirichletNeumann, NeumannDirichlet };

std::string to_string(BoundaryCondition bc);

/// Truncated Dirichlet characteristic L j_0(rho L) - sum (-1)^n alpha_2n(L) j_2n(rho L).
double characteristic_dirichlet(const NsbfCoefficientTable& table, double rho,
                                int terms);

/// Characteristic function for any of the four boundary conditions.  The
/// derivative-based conditions go through the Darboux pair, so `reciprocal`
/// is required for Neumann and DirichletNeumann.
double characteristic_value(const NsbfCoefficientTable& table,
                            const NsbfCoefficientTable& reciprocal,
                            BoundaryCondition bc, double rho, int terms);

struct SpectralDataset {
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  std::vector<double> eigenvalues;    // ascending; Neumann includes mu_0 = 0
  std::vector<double> rho;            // sqrt(eigenvalues)
  std::vector<double> normalization;  // beta_n (Dirichlet) or gamma_n (Neumann)
  std::vector<double> residuals;      // |characteristic(rho_n)| per root
  std::vector<MeshFunction> eigenfunctions;  // filled on demand
  int terms_used = 0;
  int scan_points_used = 0;
  double length = 0.0;  // interval length of the underlying problem
  std::vector<std::string> warnings;

  int count() const { return static_cast<int>(eigenvalues.size()); }
};

/// Scans rho in (0, rho_max] for sign changes of the characteristic function,
/// refines each bracket by bisection to |d rho| <= 1e-13 max(1, rho) plus
/// three secant polish steps, and squares the roots.  A gap check against the
/// asymptotic spacing pi/L triggers an automatic 4x densify-and-rescan when a
/// root appears to have been skipped.  Neumann datasets are prepended with
/// the exact mu_0 = 0.
SpectralDataset find_eigenvalues(const NsbfCoefficientTable& table,
                                 const NsbfCoefficientTable& reciprocal,
                                 BoundaryCondition bc, double rho_max,
                                 int scan_points, int terms);

/// Fills ds.normalization.  Dirichlet-type datasets use the direct quadrature
/// int u^2 kappa; Neumann uses gamma_0 = int kappa and the Darboux identity
/// gamma_n = mu_n beta_n^{1/kappa}.
void compute_normalization(SpectralDataset& ds,
                           const NsbfCoefficientTable& table,
                           const NsbfCoefficientTable& reciprocal);

/// int u(rho_n, .)^2 kappa for the dataset's boundary solution; independent
/// cross-check of the Darboux route used for Neumann constants.
double direct_norm_quadrature(const SpectralDataset& ds,
                              const NsbfCoefficientTable& table, int index);

/// Normalized eigenfunction samples; sign fixed by u'(0) > 0 for the
/// sine-based kinds (automatic from S'(rho,0) = 1) and u(0) > 0 otherwise.
MeshFunction eigenfunction_samples(const SpectralDataset& ds,
                                   const NsbfCoefficientTable& table,
                                   int index);

/// Deviations zeta_n = rho_n - (asymptotic multiple of pi/L); the multiple is
/// n for Dirichlet (1-based), n for Neumann (0-based), n - 1/2 for the mixed
/// conditions.
std::vector<double> asymptotic_gaps(const SpectralDataset& ds);

/// d_kappa = L2 norm of kappa'/(2 kappa) over [0, L].
double kappa_half_log_derivative_norm(const ConductivityProfile& p);

/// Informational truncation-error scale
///   M = 8 L max(kappa^{-1/2}) (L d + 2 d^2 (L^2 d^2 + L) e^{L d}),
/// with d = d_kappa; reported in diagnostics only.
double error_bound_diagnostic(const ConductivityProfile& p);

}  // namespace sleif
