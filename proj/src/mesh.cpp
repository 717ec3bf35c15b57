#include "sleif/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sleif {

namespace {

// Node-to-node weights of the degree-6 interpolant on one panel:
// integral from node 0 to node k of the Lagrange basis, in units of the step.
// Row k-1 holds the weights for F(x_k) - F(x_0), k = 1..6.  Row 6 is the
// classic 7-point Newton-Cotes rule.
constexpr double kPanelWeights[6][7] = {
    {19087.0 / 60480, 2713.0 / 2520, -15487.0 / 20160, 586.0 / 945,
     -6737.0 / 20160, 263.0 / 2520, -863.0 / 60480},
    {1139.0 / 3780, 94.0 / 63, 11.0 / 1260, 332.0 / 945, -269.0 / 1260,
     22.0 / 315, -37.0 / 3780},
    {137.0 / 448, 81.0 / 56, 1161.0 / 2240, 34.0 / 35, -729.0 / 2240,
     27.0 / 280, -29.0 / 2240},
    {286.0 / 945, 464.0 / 315, 128.0 / 315, 1504.0 / 945, 58.0 / 315,
     16.0 / 315, -8.0 / 945},
    {3715.0 / 12096, 725.0 / 504, 2125.0 / 4032, 250.0 / 189, 3875.0 / 4032,
     235.0 / 504, -275.0 / 12096},
    {41.0 / 140, 54.0 / 35, 27.0 / 140, 68.0 / 35, 27.0 / 140, 54.0 / 35,
     41.0 / 140},
};

void check_mesh_function(const MeshFunction& f) {
  const UniformMesh& m = f.mesh;
  if (m.points < 7 || (m.points - 1) % 6 != 0 || m.length <= 0.0)
    throw std::invalid_argument("mesh violates the 6k+1 panel structure");
  if (static_cast<int>(f.values.size()) != m.points)
    throw std::invalid_argument("mesh function has " +
                                std::to_string(f.values.size()) +
                                " values for a " + std::to_string(m.points) +
                                "-node mesh");
  for (double v : f.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("mesh function contains non-finite values");
}

}  // namespace

UniformMesh build_mesh(double length, int requested_points) {
  if (!(length > 0.0))
    throw std::invalid_argument("mesh length must be positive");
  if (requested_points < 7)
    throw std::invalid_argument("mesh needs at least 7 points");
  int points = requested_points;
  while ((points - 1) % 6 != 0) ++points;
  return UniformMesh{length, points, length / (points - 1)};
}

MeshFunction cumulative_integral(const MeshFunction& f) {
  check_mesh_function(f);
  const int n = f.mesh.points;
  const double h = f.mesh.step;
  MeshFunction out{f.mesh, std::vector<double>(n, 0.0)};
  for (int s = 0; s + 6 < n; s += 6) {
    const double* panel = f.values.data() + s;
    const double base = out.values[s];
    for (int k = 1; k <= 6; ++k) {
      const double* w = kPanelWeights[k - 1];
      double acc = 0.0;
      for (int j = 0; j < 7; ++j) acc += w[j] * panel[j];
      out.values[s + k] = base + h * acc;
    }
  }
  return out;
}

double integrate(const MeshFunction& f) {
  check_mesh_function(f);
  const double h = f.mesh.step;
  const double* w = kPanelWeights[5];
  double total = 0.0;
  for (int s = 0; s + 6 < f.mesh.points; s += 6) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += w[j] * f.values[s + j];
    total += h * acc;
  }
  return total;
}

}  // namespace sleif
