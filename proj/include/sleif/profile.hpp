#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sleif/mesh.hpp"

namespace sleif {

/// Sampled conductivity.  Stored kappa is normalized so kappa(0) = 1, which
/// leaves the equation -(kappa u')' = lambda kappa u invariant;
/// normalization_factor records the raw kappa(0) that was divided out.
struct ConductivityProfile {
  UniformMesh mesh;
  MeshFunction kappa;
  MeshFunction kappa_prime;
  std::string label;
  double normalization_factor = 1.0;
};

ConductivityProfile profile_from_closed_form(
    double length, int requested_points,
    const std::function<double(double)>& kappa,
    const std::function<double(double)>& kappa_prime, std::string label);

/// kappa = 1+x on [0,1/2], 2-x on (1/2,1].  The kink node x = 1/2 stores the
/// average of the one-sided slopes, i.e. 0.
ConductivityProfile profile_triangular(int requested_points);

/// Same mesh, kappa -> 1/kappa, kappa' -> -kappa'/kappa^2.
ConductivityProfile reciprocal_profile(const ConductivityProfile& p);

/// Piecewise polynomial in absolute coordinates: pieces[i] holds ascending
/// monomial coefficients valid on [breakpoints[i], breakpoints[i+1]].
struct PiecewisePolynomial {
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> pieces;

  double value(double x) const;
  double derivative(double x) const;  // one-sided average at breakpoints
};

/// Samples a validated piecewise polynomial (continuous, positive) on a mesh
/// over [0, breakpoints.back()].
ConductivityProfile profile_from_piecewise(const PiecewisePolynomial& poly,
                                           int requested_points,
                                           std::string label);

/// Registry: "unit" (kappa = 1), "example1" (kappa = (1+x)^4, length pi by
/// default), "triangular".  Length is overridable for unit/example1 only.
ConductivityProfile builtin_profile(const std::string& name,
                                    int requested_points, double length = 0.0);

/// Default interval length of a builtin profile (pi for example1, else 1).
double builtin_length(const std::string& name);

}  // namespace sleif
