#include "sleif/spps.hpp"

#include <cmath>

namespace sleif {

FormalPowerTable compute_formal_powers(const ConductivityProfile& p,
                                       int order_max) {
  if (order_max < 0) throw std::invalid_argument("negative formal-power order");
  const int n = p.mesh.points;
  FormalPowerTable table{p, {}};
  table.powers.reserve(order_max + 1);

  MeshFunction inv_kappa{p.mesh, std::vector<double>(n)};
  for (int j = 0; j < n; ++j) inv_kappa.values[j] = 1.0 / p.kappa.values[j];

  table.powers.push_back(MeshFunction{p.mesh, std::vector<double>(n, 1.0)});
  if (order_max >= 1) table.powers.push_back(cumulative_integral(inv_kappa));
  for (int k = 2; k <= order_max; ++k) {
    MeshFunction inner{p.mesh, std::vector<double>(n)};
    const auto& prev = table.powers[k - 2].values;
    for (int j = 0; j < n; ++j) inner.values[j] = p.kappa.values[j] * prev[j];
    inner = cumulative_integral(inner);
    for (int j = 0; j < n; ++j) inner.values[j] *= inv_kappa.values[j];
    MeshFunction phi = cumulative_integral(inner);
    const double factor = double(k) * double(k - 1);
    for (double& v : phi.values) v *= factor;
    table.powers.push_back(std::move(phi));
  }
  return table;
}

std::complex<double> spps_eval(const FormalPowerTable& table,
                               std::complex<double> rho, int node) {
  if (node < 0 || node >= table.profile.mesh.points)
    throw std::invalid_argument("node index out of range");
  const int K = table.order_max();
  const double t = std::abs(rho) * table.profile.mesh.node(node);
  if (t > 0.0) {
    const double log_tail = K * std::log(t) - std::lgamma(double(K) + 1.0);
    if (log_tail > std::log(1e-12))
      throw insufficient_order_error(
          "SPPS truncation order too low for |rho|*x = " + std::to_string(t));
  }
  const std::complex<double> irho(-rho.imag(), rho.real());  // i*rho
  std::complex<double> sum = 0.0;
  std::complex<double> coeff = 1.0;  // (i rho)^k / k!
  for (int k = 0; k <= K; ++k) {
    sum += coeff * table.powers[k].values[node];
    coeff *= irho / double(k + 1);
  }
  return sum;
}

}  // namespace sleif
