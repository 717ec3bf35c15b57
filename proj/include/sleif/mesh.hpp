#pragma once

#include <vector>

namespace sleif {

/// Uniform mesh on [0, L] whose subinterval count is a multiple of 6, so that
/// the composite order-6 Newton-Cotes rule tiles it exactly.
struct UniformMesh {
  double length = 0.0;
  int points = 0;
  double step = 0.0;

  double node(int j) const { return j == points - 1 ? length : j * step; }
  bool operator==(const UniformMesh&) const = default;
};

/// Real-valued samples on every node of a mesh.
struct MeshFunction {
  UniformMesh mesh;
  std::vector<double> values;
};

/// Smallest admissible mesh with at least `requested_points` nodes.
/// Throws std::invalid_argument for length <= 0 or requested_points < 7.
UniformMesh build_mesh(double length, int requested_points);

/// Antiderivative F(x_j) = integral of f from 0 to x_j, F(0) = 0.
/// Within each panel of 6 subintervals the degree-6 interpolant through the
/// 7 panel nodes is integrated node-to-node, so the rule is exact for
/// polynomials of degree <= 6 and every node receives a cumulative value.
MeshFunction cumulative_integral(const MeshFunction& f);

/// Integral of f over the whole mesh (last value of the antiderivative,
/// without materializing it).
double integrate(const MeshFunction& f);

}  // namespace sleif
