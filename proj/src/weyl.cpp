#include "sleif/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sleif {

namespace {

using cplx = std::complex<double>;

void check_poles(cplx lambda, std::span<const double> poles,
                 const char* which) {
  for (double p : poles)
    if (std::abs(lambda - p) < pole_exclusion_radius(p))
      throw pole_proximity_error(
          std::string(which) + " Weyl function evaluated too close to an eigenvalue",
          p);
}

}  // namespace

cplx weyl_dirichlet(const NsbfCoefficientTable& table, cplx lambda, int terms,
                    std::span<const double> poles) {
  check_poles(lambda, poles, "Dirichlet");
  const cplx rho = std::sqrt(lambda);  // principal branch; series are even in rho
  const int last = table.profile.mesh.points - 1;
  return cosine_solution(table, rho, last, terms) /
         sine_solution(table, rho, last, terms);
}

cplx weyl_neumann(const NsbfCoefficientTable& table,
                  const NsbfCoefficientTable& reciprocal, cplx mu, int terms,
                  std::span<const double> poles) {
  require_reciprocal_pair(table, reciprocal);
  if (std::abs(mu) < pole_exclusion_radius(0.0))
    throw pole_proximity_error("mu = 0 is always a Neumann eigenvalue", 0.0);
  check_poles(mu, poles, "Neumann");
  return -weyl_dirichlet(reciprocal, mu, terms) / mu;
}

WeylGrid weyl_grid(const NsbfCoefficientTable& table,
                   const NsbfCoefficientTable& reciprocal,
                   const WeylGridSpec& spec, BoundaryCondition kind,
                   int terms) {
  if (kind != BoundaryCondition::Dirichlet && kind != BoundaryCondition::Neumann)
    throw std::invalid_argument("Weyl grids cover Dirichlet and Neumann kinds");
  if (spec.n_re < 2 || spec.n_im < 1 || !(spec.re_max > spec.re_min) ||
      spec.im_max < spec.im_min || spec.im_min < 0.0)
    throw std::invalid_argument("malformed Weyl grid ranges");

  // Real eigenvalues inside (and slightly beyond) the window mark the poles.
  const double L = table.profile.mesh.length;
  const double rho_need =
      std::sqrt(std::max(spec.re_max, 1.0)) + 2.0 * std::numbers::pi / L;
  const int scan = std::max(64, static_cast<int>(rho_need * L * 8.0));
  SpectralDataset ds =
      find_eigenvalues(table, reciprocal, kind, rho_need, scan, terms);

  WeylGrid grid;
  grid.spec = spec;
  for (double ev : ds.eigenvalues)
    if (ev >= spec.re_min - pole_exclusion_radius(ev) &&
        ev <= spec.re_max + pole_exclusion_radius(ev))
      grid.poles.push_back(ev);

  grid.values.assign(static_cast<size_t>(spec.n_re) * spec.n_im, cplx{});
  grid.near_pole.assign(grid.values.size(), 0);
  const double dre =
      (spec.re_max - spec.re_min) / std::max(1, spec.n_re - 1);
  const double dim =
      spec.n_im > 1 ? (spec.im_max - spec.im_min) / (spec.n_im - 1) : 0.0;
  for (int r = 0; r < spec.n_im; ++r) {
    for (int c = 0; c < spec.n_re; ++c) {
      const cplx lambda(spec.re_min + c * dre, spec.im_min + r * dim);
      const size_t idx = static_cast<size_t>(r) * spec.n_re + c;
      bool excluded = false;
      for (double p : ds.eigenvalues)
        if (std::abs(lambda - p) < pole_exclusion_radius(p)) excluded = true;
      if (kind == BoundaryCondition::Neumann &&
          std::abs(lambda) < pole_exclusion_radius(0.0))
        excluded = true;
      if (excluded) {
        grid.near_pole[idx] = 1;
        continue;
      }
      grid.values[idx] = kind == BoundaryCondition::Dirichlet
                             ? weyl_dirichlet(table, lambda, terms)
                             : weyl_neumann(table, reciprocal, lambda, terms);
    }
  }
  return grid;
}

double weyl_dirichlet_residue(const NsbfCoefficientTable& table,
                              double lambda_n, int terms) {
  // eps * M(lambda + eps) = Res + a eps + O(eps^2); one Richardson step per
  // decade of the geometric eps sequence removes the linear term.
  std::vector<double> probes;
  for (int k = 2; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    probes.push_back(
        (eps * weyl_dirichlet(table, lambda_n + eps, terms)).real());
  }
  const size_t n = probes.size();
  return (10.0 * probes[n - 1] - probes[n - 2]) / 9.0;
}

}  // namespace sleif
