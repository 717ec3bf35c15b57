#include "sleif/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace sleif {

namespace {

constexpr double kRootTol = 1e-13;

double refine_root(const std::function<double(double)>& f, double a, double b,
                   double fa, double fb) {
  // Bisection on a guaranteed bracket, then three secant polish steps.
  double mid = 0.5 * (a + b);
  while (b - a > kRootTol * std::max(1.0, std::abs(mid))) {
    mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  double x0 = a, x1 = b, f0 = fa, f1 = fb;
  for (int i = 0; i < 3; ++i) {
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= a && x2 <= b)) break;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x2);
    if (f1 == 0.0) break;
  }
  return x1;
}

bool needs_sine(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ||
         bc == BoundaryCondition::DirichletNeumann;
}

}  // namespace

std::string to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::Dirichlet: return "dirichlet";
    case BoundaryCondition::Neumann: return "neumann";
    case BoundaryCondition::DirichletNeumann: return "dirichlet-neumann";
    case BoundaryCondition::NeumannDirichlet: return "neumann-dirichlet";
  }
  return "?";
}

double characteristic_dirichlet(const NsbfCoefficientTable& table, double rho,
                                int terms) {
  return sine_solution(table, rho, table.profile.mesh.points - 1, terms).real();
}

double characteristic_value(const NsbfCoefficientTable& table,
                            const NsbfCoefficientTable& reciprocal,
                            BoundaryCondition bc, double rho, int terms) {
  const int last = table.profile.mesh.points - 1;
  switch (bc) {
    case BoundaryCondition::Dirichlet:
      return sine_solution(table, rho, last, terms).real();
    case BoundaryCondition::Neumann:
      return cosine_solution_deriv(table, reciprocal, rho, last, terms).real();
    case BoundaryCondition::DirichletNeumann:
      return sine_solution_deriv(table, reciprocal, rho, last, terms).real();
    case BoundaryCondition::NeumannDirichlet:
      return cosine_solution(table, rho, last, terms).real();
  }
  throw std::invalid_argument("unknown boundary condition");
}

SpectralDataset find_eigenvalues(const NsbfCoefficientTable& table,
                                 const NsbfCoefficientTable& reciprocal,
                                 BoundaryCondition bc, double rho_max,
                                 int scan_points, int terms) {
  if (!(rho_max > 0.0)) throw std::invalid_argument("rho_max must be positive");
  if (scan_points < 2) throw std::invalid_argument("need at least 2 scan points");
  if (bc != BoundaryCondition::Dirichlet &&
      bc != BoundaryCondition::NeumannDirichlet)
    require_reciprocal_pair(table, reciprocal);

  const double L = table.profile.mesh.length;
  const double gap = std::numbers::pi / L;
  const auto f = [&](double rho) {
    return characteristic_value(table, reciprocal, bc, rho, terms);
  };

  SpectralDataset ds;
  ds.bc = bc;
  ds.terms_used = terms;

  int points = scan_points;
  std::vector<double> roots;
  for (int attempt = 0; attempt < 3; ++attempt) {
    roots.clear();
    const double h_scan = rho_max / (points - 1);
    double prev_rho = h_scan, prev_val = f(h_scan);  // rho = 0 excluded
    if (prev_val == 0.0) roots.push_back(prev_rho);
    for (int i = 2; i < points; ++i) {
      const double cur_rho = i * h_scan;
      const double cur_val = f(cur_rho);
      if (cur_val == 0.0)
        roots.push_back(cur_rho);
      else if ((prev_val < 0.0) != (cur_val < 0.0))
        roots.push_back(refine_root(f, prev_rho, cur_rho, prev_val, cur_val));
      prev_rho = cur_rho;
      prev_val = cur_val;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) {
                              return b - a < 0.5 * h_scan;
                            }),
                roots.end());
    // A gap well beyond the asymptotic spacing suggests a skipped root.
    bool suspicious = false;
    for (size_t i = 1; i < roots.size(); ++i)
      if (roots[i] - roots[i - 1] > 1.5 * gap) suspicious = true;
    if (!suspicious) break;
    if (attempt == 2) {
      ds.warnings.push_back("scan-too-coarse: a root gap exceeds 1.5*pi/L");
      break;
    }
    points = 4 * (points - 1) + 1;
  }
  ds.scan_points_used = points;
  ds.length = L;

  if (bc == BoundaryCondition::Neumann) {
    ds.eigenvalues.push_back(0.0);  // mu_0 = 0, constant eigenfunction
    ds.rho.push_back(0.0);
    ds.residuals.push_back(0.0);
  }
  for (double r : roots) {
    ds.eigenvalues.push_back(r * r);
    ds.rho.push_back(r);
    ds.residuals.push_back(std::abs(f(r)));
  }
  return ds;
}

void compute_normalization(SpectralDataset& ds,
                           const NsbfCoefficientTable& table,
                           const NsbfCoefficientTable& reciprocal) {
  ds.normalization.assign(ds.count(), 0.0);
  if (ds.bc == BoundaryCondition::Neumann) {
    require_reciprocal_pair(table, reciprocal);
    ds.normalization[0] = integrate(table.profile.kappa);  // gamma_0
    const int last = table.profile.mesh.points - 1;
    for (int i = 1; i < ds.count(); ++i) {
      // gamma_n = mu_n * beta_n of the reciprocal Dirichlet problem
      MeshFunction s{table.profile.mesh,
                     std::vector<double>(table.profile.mesh.points)};
      for (int j = 0; j <= last; ++j) {
        const double v =
            sine_solution(reciprocal, ds.rho[i], j, ds.terms_used).real();
        s.values[j] = v * v * reciprocal.profile.kappa.values[j];
      }
      ds.normalization[i] = ds.eigenvalues[i] * integrate(s);
    }
    return;
  }
  for (int i = 0; i < ds.count(); ++i)
    ds.normalization[i] = direct_norm_quadrature(ds, table, i);
}

double direct_norm_quadrature(const SpectralDataset& ds,
                              const NsbfCoefficientTable& table, int index) {
  if (index < 0 || index >= ds.count())
    throw std::invalid_argument("eigenvalue index out of range");
  const auto& mesh = table.profile.mesh;
  MeshFunction f{mesh, std::vector<double>(mesh.points)};
  const bool sine = needs_sine(ds.bc);
  for (int j = 0; j < mesh.points; ++j) {
    const double u =
        sine ? sine_solution(table, ds.rho[index], j, ds.terms_used).real()
             : cosine_solution(table, ds.rho[index], j, ds.terms_used).real();
    f.values[j] = u * u * table.profile.kappa.values[j];
  }
  return integrate(f);
}

MeshFunction eigenfunction_samples(const SpectralDataset& ds,
                                   const NsbfCoefficientTable& table,
                                   int index) {
  if (index < 0 || index >= ds.count())
    throw std::invalid_argument("eigenvalue index out of range");
  if (ds.normalization.empty())
    throw std::invalid_argument("normalization constants not computed yet");
  const auto& mesh = table.profile.mesh;
  const double scale = 1.0 / std::sqrt(ds.normalization[index]);
  const bool sine = needs_sine(ds.bc);
  MeshFunction phi{mesh, std::vector<double>(mesh.points)};
  for (int j = 0; j < mesh.points; ++j) {
    const double u =
        sine ? sine_solution(table, ds.rho[index], j, ds.terms_used).real()
             : cosine_solution(table, ds.rho[index], j, ds.terms_used).real();
    phi.values[j] = scale * u;
  }
  return phi;
}

std::vector<double> asymptotic_gaps(const SpectralDataset& ds) {
  if (ds.count() < 1) return {};
  const double pi = std::numbers::pi;
  std::vector<double> zeta(ds.count());
  for (int i = 0; i < ds.count(); ++i) {
    double n;
    switch (ds.bc) {
      case BoundaryCondition::Dirichlet: n = i + 1.0; break;
      case BoundaryCondition::Neumann: n = i; break;
      default: n = i + 0.5; break;
    }
    zeta[i] = ds.rho[i] - n * pi / ds.length;
  }
  return zeta;
}

double kappa_half_log_derivative_norm(const ConductivityProfile& p) {
  MeshFunction f{p.mesh, std::vector<double>(p.mesh.points)};
  for (int j = 0; j < p.mesh.points; ++j) {
    const double r = p.kappa_prime.values[j] / (2.0 * p.kappa.values[j]);
    f.values[j] = r * r;
  }
  return std::sqrt(integrate(f));
}

double error_bound_diagnostic(const ConductivityProfile& p) {
  const double L = p.mesh.length;
  const double d = kappa_half_log_derivative_norm(p);
  double sup = 0.0;
  for (double k : p.kappa.values) sup = std::max(sup, 1.0 / std::sqrt(k));
  return 8.0 * L * sup *
         (L * d + 2.0 * d * d * (L * L * d * d + L) * std::exp(L * d));
}

}  // namespace sleif
