#pragma once

#include <complex>
#include <vector>

#include "sleif/profile.hpp"
#include "sleif/spps.hpp"

namespace sleif {

/// Coefficients of the spherical-Bessel series for the solutions of
/// -(kappa u')' = rho^2 kappa u.  sigma_m = x^m alpha_m is the numerically
/// primary object (the recursion runs in sigma); alpha_m is derived, with
/// alpha_m(0) = 0 and non-finite quotients (underflowed sigma_m / x^m at
/// large m near x = 0) forced to 0.
struct NsbfCoefficientTable {
  ConductivityProfile profile;
  int order_max = 0;
  std::vector<MeshFunction> sigma;
  std::vector<MeshFunction> alpha;
};

/// Builds sigma_0..sigma_N by the two-step recursion
///   sigma_0 = x - int 1/kappa,
///   sigma_1 = (3/2) x^2 - 3 int (1/kappa) int kappa,
///   theta_m = (1/kappa) int {2(m-1) kappa + s kappa'} sigma_{m-2},
///   eta_m   = int {2(2m-1) t sigma_{m-2} - (2m-1) theta_m},
///   sigma_m = (2m+1)/(2m-3) [x^2 sigma_{m-2} - eta_m],
/// and the derived alpha_m = sigma_m / x^m.
NsbfCoefficientTable compute_coefficients(const ConductivityProfile& p,
                                          int order_max);

/// Independent route to alpha_n through the Fourier-Legendre formula
///   alpha_n = (2n+1) sum_k l_{k,n}/(k+1) (x^{k+1} - phi^(k+1)(x)) / x^k.
/// Requires fp.order_max() >= n+1.
MeshFunction alpha_from_formal_powers(const FormalPowerTable& fp, int n);

/// |sum_{n<=terms} alpha_n(x)/(2x) - (1 - 1/sqrt(kappa(x)))| at a node >= 1.
double goursat_residual(const NsbfCoefficientTable& table, int node,
                        int terms);

/// Solution with S(rho,0) = 0, S'(rho,0) = 1:
///   S = x j_0(rho x) + sum_k (-1)^{k+1} alpha_2k(x) j_2k(rho x).
/// Even in rho; the rho = 0 limit is handled through x j_0.
std::complex<double> sine_solution(const NsbfCoefficientTable& table,
                                   std::complex<double> rho, int node,
                                   int terms);

/// Solution with C(rho,0) = 1, C'(rho,0) = 0:
///   C = cos(rho x) + rho sum_k (-1)^k alpha_{2k+1}(x) j_{2k+1}(rho x).
std::complex<double> cosine_solution(const NsbfCoefficientTable& table,
                                     std::complex<double> rho, int node,
                                     int terms);

/// Solution with u(0) = 1, u'(0) = i rho:
///   e = exp(i rho x) - i rho sum_n i^n alpha_n(x) j_n(rho x).
std::complex<double> exp_solution(const NsbfCoefficientTable& table,
                                  std::complex<double> rho, int node,
                                  int terms);

/// Derivatives via the Darboux transform v = kappa u', which maps solutions
/// for kappa to solutions for 1/kappa:
///   S'_kappa = C_{1/kappa} / kappa,   C'_kappa = -rho^2 S_{1/kappa} / kappa.
/// `reciprocal` must be the coefficient table of reciprocal_profile(profile).
std::complex<double> sine_solution_deriv(const NsbfCoefficientTable& table,
                                         const NsbfCoefficientTable& reciprocal,
                                         std::complex<double> rho, int node,
                                         int terms);

std::complex<double> cosine_solution_deriv(
    const NsbfCoefficientTable& table, const NsbfCoefficientTable& reciprocal,
    std::complex<double> rho, int node, int terms);

/// Validates the pairing used by the derivative evaluators.
void require_reciprocal_pair(const NsbfCoefficientTable& table,
                             const NsbfCoefficientTable& reciprocal);

}  // namespace sleif
