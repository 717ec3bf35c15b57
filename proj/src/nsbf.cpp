#include "sleif/nsbf.hpp"

#include <cmath>
#include <stdexcept>

#include "sleif/specfun.hpp"

namespace sleif {

namespace {

using cplx = std::complex<double>;

void check_node(const NsbfCoefficientTable& t, int node, int terms) {
  if (node < 0 || node >= t.profile.mesh.points)
    throw std::invalid_argument("node index out of range");
  if (terms < 0 || terms > t.order_max)
    throw std::invalid_argument("series truncation exceeds table order");
}

}  // namespace

NsbfCoefficientTable compute_coefficients(const ConductivityProfile& p,
                                          int order_max) {
  if (order_max < 0) throw std::invalid_argument("negative truncation order");
  const int n = p.mesh.points;
  NsbfCoefficientTable table{p, order_max, {}, {}};
  table.sigma.reserve(order_max + 1);

  std::vector<double> x(n), inv_kappa(n);
  for (int j = 0; j < n; ++j) {
    x[j] = p.mesh.node(j);
    inv_kappa[j] = 1.0 / p.kappa.values[j];
  }

  // sigma_0 = x - int 1/kappa
  MeshFunction work{p.mesh, std::vector<double>(inv_kappa)};
  MeshFunction s0 = cumulative_integral(work);
  for (int j = 0; j < n; ++j) s0.values[j] = x[j] - s0.values[j];
  table.sigma.push_back(std::move(s0));

  if (order_max >= 1) {
    // sigma_1 = (3/2) x^2 - 3 int (1/kappa) int kappa
    work.values = p.kappa.values;
    MeshFunction inner = cumulative_integral(work);
    for (int j = 0; j < n; ++j) inner.values[j] *= inv_kappa[j];
    MeshFunction s1 = cumulative_integral(inner);
    for (int j = 0; j < n; ++j)
      s1.values[j] = 1.5 * x[j] * x[j] - 3.0 * s1.values[j];
    table.sigma.push_back(std::move(s1));
  }

  for (int m = 2; m <= order_max; ++m) {
    const auto& prev = table.sigma[m - 2].values;
    // theta_m = (1/kappa) int {2(m-1) kappa + s kappa'} sigma_{m-2}
    for (int j = 0; j < n; ++j)
      work.values[j] = (2.0 * (m - 1) * p.kappa.values[j] +
                        x[j] * p.kappa_prime.values[j]) *
                       prev[j];
    MeshFunction theta = cumulative_integral(work);
    for (int j = 0; j < n; ++j) theta.values[j] *= inv_kappa[j];
    // eta_m = int {2(2m-1) t sigma_{m-2} - (2m-1) theta_m}
    for (int j = 0; j < n; ++j)
      work.values[j] =
          (2 * m - 1) * (2.0 * x[j] * prev[j] - theta.values[j]);
    MeshFunction eta = cumulative_integral(work);
    MeshFunction sm{p.mesh, std::vector<double>(n)};
    const double factor = double(2 * m + 1) / double(2 * m - 3);
    for (int j = 0; j < n; ++j)
      sm.values[j] = factor * (x[j] * x[j] * prev[j] - eta.values[j]);
    table.sigma.push_back(std::move(sm));
  }

  // alpha_m(0) = 0 (the numerator vanishes to order x^{m+2}); elsewhere the
  // plain division stands.  Near x = 0 at large m both sigma_m and x^m
  // underflow and the quotient is roundoff amplified without limit; the true
  // coefficients are uniformly bounded (sup |a_n| <= C/sqrt(n)), so any
  // quotient beyond 1e6 is provably noise and is zeroed.  Those nodes only
  // ever multiply j_m(rho x) values that underflow to 0 there.
  table.alpha.reserve(order_max + 1);
  for (int m = 0; m <= order_max; ++m) {
    MeshFunction am{p.mesh, std::vector<double>(n, 0.0)};
    for (int j = 1; j < n; ++j) {
      const double v = table.sigma[m].values[j] / std::pow(x[j], m);
      am.values[j] = std::isfinite(v) && std::abs(v) <= 1e6 ? v : 0.0;
    }
    if (m == 0) am.values[0] = table.sigma[0].values[0];  // both are 0
    table.alpha.push_back(std::move(am));
  }
  return table;
}

MeshFunction alpha_from_formal_powers(const FormalPowerTable& fp, int n) {
  if (n < 0) throw std::invalid_argument("negative coefficient index");
  if (fp.order_max() < n + 1)
    throw std::invalid_argument("formal-power table order must exceed n");
  const auto& mesh = fp.profile.mesh;
  const auto legendre = legendre_coefficients(n);
  const auto& l = legendre[n];
  MeshFunction out{mesh, std::vector<double>(mesh.points, 0.0)};
  for (int j = 1; j < mesh.points; ++j) {
    const double x = mesh.node(j);
    double sum = 0.0;
    double xk = 1.0;  // x^k
    for (int k = 0; k <= n; ++k) {
      if (l[k] != 0.0) {
        const double numer = xk * x - fp.powers[k + 1].values[j];
        sum += l[k] / double(k + 1) * (numer / xk);
      }
      xk *= x;
    }
    out.values[j] = (2.0 * n + 1.0) * sum;  // alpha_n = 2 a_n
  }
  return out;
}

double goursat_residual(const NsbfCoefficientTable& table, int node,
                        int terms) {
  check_node(table, node, terms);
  if (node < 1)
    throw std::invalid_argument("Goursat residual needs x > 0");
  const double x = table.profile.mesh.node(node);
  double sum = 0.0;
  for (int n = 0; n <= terms; ++n) sum += table.alpha[n].values[node];
  const double target = 1.0 - 1.0 / std::sqrt(table.profile.kappa.values[node]);
  return std::abs(sum / (2.0 * x) - target);
}

cplx sine_solution(const NsbfCoefficientTable& table, cplx rho, int node,
                   int terms) {
  check_node(table, node, terms);
  const double x = table.profile.mesh.node(node);
  const auto bessel = spherical_bessel_sequence(terms, rho * x);
  cplx value = x * bessel[0];  // sin(rho x)/rho = x j_0(rho x)
  double sign = -1.0;          // (-1)^{k+1}
  for (int k = 0; 2 * k <= terms; ++k, sign = -sign)
    value += sign * table.alpha[2 * k].values[node] * bessel[2 * k];
  return value;
}

cplx cosine_solution(const NsbfCoefficientTable& table, cplx rho, int node,
                     int terms) {
  check_node(table, node, terms);
  const double x = table.profile.mesh.node(node);
  const auto bessel = spherical_bessel_sequence(terms, rho * x);
  cplx sum = 0.0;
  double sign = 1.0;  // (-1)^k
  for (int k = 0; 2 * k + 1 <= terms; ++k, sign = -sign)
    sum += sign * table.alpha[2 * k + 1].values[node] * bessel[2 * k + 1];
  return std::cos(rho * x) + rho * sum;
}

cplx exp_solution(const NsbfCoefficientTable& table, cplx rho, int node,
                  int terms) {
  check_node(table, node, terms);
  const double x = table.profile.mesh.node(node);
  const auto bessel = spherical_bessel_sequence(terms, rho * x);
  const cplx i(0.0, 1.0);
  cplx sum = 0.0;
  cplx in = 1.0;  // i^n
  for (int n = 0; n <= terms; ++n, in *= i)
    sum += in * table.alpha[n].values[node] * bessel[n];
  return std::exp(i * rho * x) - i * rho * sum;
}

void require_reciprocal_pair(const NsbfCoefficientTable& table,
                             const NsbfCoefficientTable& reciprocal) {
  if (!(table.profile.mesh == reciprocal.profile.mesh))
    throw std::invalid_argument("coefficient tables live on different meshes");
  for (int j = 0; j < table.profile.mesh.points; ++j) {
    const double prod =
        table.profile.kappa.values[j] * reciprocal.profile.kappa.values[j];
    if (std::abs(prod - 1.0) > 1e-10)
      throw std::invalid_argument(
          "derivative evaluation needs the reciprocal-profile table");
  }
}

cplx sine_solution_deriv(const NsbfCoefficientTable& table,
                         const NsbfCoefficientTable& reciprocal, cplx rho,
                         int node, int terms) {
  require_reciprocal_pair(table, reciprocal);
  return cosine_solution(reciprocal, rho, node, terms) /
         table.profile.kappa.values[node];
}

cplx cosine_solution_deriv(const NsbfCoefficientTable& table,
                           const NsbfCoefficientTable& reciprocal, cplx rho,
                           int node, int terms) {
  require_reciprocal_pair(table, reciprocal);
  return -rho * rho * sine_solution(reciprocal, rho, node, terms) /
         table.profile.kappa.values[node];
}

}  // namespace sleif
