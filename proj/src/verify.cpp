#include "sleif/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "sleif/nsbf.hpp"
#include "sleif/profile.hpp"
#include "sleif/spectral.hpp"
#include "sleif/weyl.hpp"

namespace sleif {

namespace {

constexpr double kPi = std::numbers::pi;

// Published reference eigenvalues of the Dirichlet problem for
// kappa = (1+x)^4 on [0, pi] (exact-characteristic column).  The last row is
// tabulated with label 30 but is the 32nd eigenvalue of the problem: the
// closed-form characteristic has lambda_n ~ n^2 + 2/(1+pi), so 1024.48 sits
// at n = 32 while lambda_30 = 900.48; the value itself is genuine.
struct ReferenceRow {
  int label;
  double value;
};
constexpr ReferenceRow kSmoothReference[] = {
    {1, 1.34805063504836},  {2, 4.43028410885793},  {3, 9.45645939050872},
    {4, 16.4672876486339},  {5, 25.4726699599228},  {6, 36.4757027586749},
    {20, 400.482239127963}, {21, 441.482300968039}, {22, 484.482354595155},
    {23, 529.482401400839}, {30, 1024.48264505729},
};

// Published reference eigenvalues for the triangular conductivity (series
// method, truncation 40).  Rows 9 and 10 duplicate the power-series column
// of the same source digit-for-digit and disagree with both the closed-form
// spectrum and the finite-difference reference; see the closed-form oracle
// check next to this one.
constexpr double kTriangularReference[] = {
    8.35158241342649, 39.3158490304397, 87.3252433641185, 157.748091718428,
    245.239779974236, 355.139577098527, 482.110512751393, 631.487939226560,
    798.771379456998, 985.220115811387,
};

std::string format_delta(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Scan + bisection root finder for the closed-form oracles (independent of
// the solver's own machinery).
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, int points) {
  std::vector<double> roots;
  const double h = (hi - lo) / (points - 1);
  double pr = lo, pv = f(lo);
  for (int i = 1; i < points; ++i) {
    const double r = lo + i * h;
    const double v = f(r);
    if (v == 0.0) {
      roots.push_back(r);
    } else if ((pv < 0.0) != (v < 0.0)) {
      double a = pr, b = r, fa = pv;
      while (b - a > 1e-14 * std::max(1.0, 0.5 * (a + b))) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) { a = b = m; break; }
        if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; } else { b = m; }
      }
      roots.push_back(0.5 * (a + b));
    }
    pr = r;
    pv = v;
  }
  return roots;
}

struct Problem {
  ConductivityProfile profile;
  NsbfCoefficientTable table;
  NsbfCoefficientTable reciprocal;

  Problem(const std::string& name, int points, int order, double length = 0.0)
      : profile(builtin_profile(name, points, length)),
        table(compute_coefficients(profile, order)),
        reciprocal(compute_coefficients(reciprocal_profile(profile), order)) {}
};

struct Suite {
  std::vector<CheckResult> results;

  void add(std::string name, double delta, double tol, std::string detail = "") {
    results.push_back(
        {std::move(name), delta <= tol, delta, tol, std::move(detail)});
  }
};

// ---- smooth benchmark: kappa = (1+x)^4 on [0, pi] ----

void check_smooth_reference(Suite& s, const SpectralDataset& ds) {
  double worst_ratio = 0.0;  // row error over its band tolerance
  std::string detail;
  bool ok = true;
  for (const auto& row : kSmoothReference) {
    // Values are matched against the nearest computed eigenvalue; rows up to
    // label 23 must also sit at their stated index.
    int nearest = 0;
    for (int i = 1; i < ds.count(); ++i)
      if (std::abs(ds.eigenvalues[i] - row.value) <
          std::abs(ds.eigenvalues[nearest] - row.value))
        nearest = i;
    const double err = std::abs(ds.eigenvalues[nearest] - row.value);
    const double tol = row.label <= 6 ? 1e-8 : 1e-6;
    worst_ratio = std::max(worst_ratio, err / tol);
    if (row.label <= 23 && nearest != row.label - 1) ok = false;
    if (row.label == 30 && nearest != 31)
      detail += "unexpected index for the 1024.48 row; ";
    if (err > tol) ok = false;
  }
  detail += "abs tol 1e-8 for rows 1..6, 1e-6 above; delta is the worst "
            "error/tol ratio; tabulated row 30 matched at eigenvalue index 32";
  s.results.push_back({"smooth-reference-eigenvalues", ok, worst_ratio, 1.0,
                       detail});
}

void check_exact_characteristic(Suite& s, const SpectralDataset& ds) {
  // Closed form for the (1+x)^2 impedance: Phi(rho) = sin(rho L)/rho
  // + (L^2/((1+L) rho)) j_1(rho L).
  const double L = kPi;
  const auto phi = [L](double rho) {
    const double z = rho * L;
    const double j1 = std::sin(z) / (z * z) - std::cos(z) / z;
    return std::sin(z) / rho + L * L / ((1.0 + L) * rho) * j1;
  };
  const auto exact = scan_roots(phi, 1e-6, 32.5, 6501);
  double worst = 0.0;
  const int n = std::min<int>(32, std::min<int>(exact.size(), ds.count()));
  for (int i = 0; i < n; ++i) {
    const double lam = exact[i] * exact[i];
    worst = std::max(worst, std::abs(ds.eigenvalues[i] - lam) / lam);
  }
  s.add("smooth-exact-characteristic", worst, 1e-10,
        "relative agreement over the first " + std::to_string(n) + " roots");
}

void check_goursat(Suite& s, const Problem& ex1) {
  const int last = ex1.profile.mesh.points - 1;
  const double r120 = goursat_residual(ex1.table, last, 120);
  const double r30 = goursat_residual(ex1.table, last, 30);
  s.add("goursat-residual-at-L", r120, 1e-3);
  // For this smooth conductivity the series has already converged to the
  // quadrature floor by N = 30, so the N = 120 partial sum only accumulates
  // roundoff; the monotone-decrease claim does not hold on this profile.
  s.results.push_back({"goursat-residual-decreasing", r120 < r30, r120, r30,
                       "residual(30) = " + format_delta(r30) +
                           ", residual(120) = " + format_delta(r120) +
                           "; converged below the floor before N = 30"});
}

void check_darboux_and_wronskian(Suite& s, const Problem& ex1) {
  const auto& mesh = ex1.profile.mesh;
  const int terms = 120;
  const double h = mesh.step;
  const int nodes[3] = {(mesh.points - 1) / 4, (mesh.points - 1) / 2,
                        mesh.points - 1};
  const double rhos[3] = {1.0, 2.0, 5.0};

  const auto S = [&](double rho, int j) {
    return sine_solution(ex1.table, rho, j, terms).real();
  };
  const auto C = [&](double rho, int j) {
    return cosine_solution(ex1.table, rho, j, terms).real();
  };

  double worst_darboux = 0.0, worst_wronskian = 0.0;
  for (double rho : rhos) {
    for (int j : nodes) {
      const double kap = ex1.profile.kappa.values[j];
      // finite-difference derivative: centered 4th order inside, one-sided
      // 4th order at the right endpoint
      const auto fd = [&](const std::function<double(double, int)>& f) {
        if (j + 2 < mesh.points)
          return (-f(rho, j + 2) + 8.0 * f(rho, j + 1) - 8.0 * f(rho, j - 1) +
                  f(rho, j - 2)) /
                 (12.0 * h);
        return (25.0 * f(rho, j) - 48.0 * f(rho, j - 1) + 36.0 * f(rho, j - 2) -
                16.0 * f(rho, j - 3) + 3.0 * f(rho, j - 4)) /
               (12.0 * h);
      };
      const double s_recip =
          sine_solution(ex1.reciprocal, rho, j, terms).real();
      const double c_recip =
          cosine_solution(ex1.reciprocal, rho, j, terms).real();
      worst_darboux = std::max(
          worst_darboux, std::abs(kap * fd(C) + rho * rho * s_recip));
      worst_darboux =
          std::max(worst_darboux, std::abs(kap * fd(S) - c_recip));
      // kappa (C S' - C' S) = C C_{1/kappa} + rho^2 S S_{1/kappa} = 1
      worst_wronskian = std::max(
          worst_wronskian, std::abs(C(rho, j) * c_recip +
                                    rho * rho * S(rho, j) * s_recip - 1.0));
    }
  }
  s.add("darboux-identities", worst_darboux, 1e-5,
        "rho in {1,2,5}, x in {L/4, L/2, L}");
  s.add("wronskian-normalization", worst_wronskian, 1e-6,
        "same lattice");
}

void check_weyl_residues(Suite& s, const Problem& ex1,
                         const SpectralDataset& ds) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double res = weyl_dirichlet_residue(ex1.table, ds.eigenvalues[i], 120);
    worst = std::max(worst, std::abs(res * ds.normalization[i] - 1.0));
  }
  s.add("weyl-residues", worst, 1e-4, "residue * beta_n vs 1, n = 1..3");
}

void check_asymptotics(Suite& s, const SpectralDataset& ds) {
  const auto zeta = asymptotic_gaps(ds);
  double bound = 0.0;
  for (double z : zeta) bound = std::max(bound, std::abs(z));
  s.add("asymptotic-gaps-bounded", bound, 1.0, "max |rho_n - n pi/L|");

  double growth = 0.0, step = 0.0;
  for (int n = 41; n <= 60 && n <= ds.count(); ++n) {
    growth += zeta[n - 1] * zeta[n - 1];
    step = std::max(step, zeta[n - 1] * zeta[n - 1]);
  }
  // zeta_n -> 1/((1+pi) n) for this conductivity, which forces the partial
  // sums of zeta^2 to grow by (1/(1+pi)^2) sum 1/n^2 ~ 4.8e-4 over n=41..60;
  // the per-step growth stays below 1e-4.
  s.add("asymptotic-tail-growth", growth, 1e-4,
        "sum of zeta_n^2 over n = 41..60; max single step " +
            format_delta(step));
}

// ---- triangular benchmark ----

void check_triangular_reference(Suite& s, const SpectralDataset& ds) {
  double worst = 0.0;
  std::string rows;
  for (int i = 0; i < 10; ++i) {
    const double rel =
        std::abs(ds.eigenvalues[i] - kTriangularReference[i]) /
        kTriangularReference[i];
    worst = std::max(worst, rel);
    if (rel > 1e-6) rows += (rows.empty() ? "" : ",") + std::to_string(i + 1);
  }
  s.add("triangular-reference-eigenvalues", worst, 1e-6,
        rows.empty() ? "" : "rows " + rows +
            " exceed the gate; the closed-form oracle below shows the "
            "computed spectrum is the correct one");
}

void check_triangular_oracle(Suite& s, const SpectralDataset& ds) {
  // With t = 1+x (left piece) and s = 2-x (right piece) the equation becomes
  // the order-zero Bessel equation, so u(tau) = Y0(rho) J0(rho tau)
  // - J0(rho) Y0(rho tau) vanishes at x = 0 and the spectrum splits at the
  // symmetric midpoint into the roots of u(3/2 rho) and u'(3/2 rho).
  const auto anti = [](double rho) {
    return std::cyl_neumann(0.0, rho) * std::cyl_bessel_j(0.0, 1.5 * rho) -
           std::cyl_bessel_j(0.0, rho) * std::cyl_neumann(0.0, 1.5 * rho);
  };
  const auto sym = [](double rho) {
    return std::cyl_neumann(0.0, rho) * std::cyl_bessel_j(1.0, 1.5 * rho) -
           std::cyl_bessel_j(0.0, rho) * std::cyl_neumann(1.0, 1.5 * rho);
  };
  auto roots = scan_roots(sym, 1e-6, 33.0, 33001);
  const auto anti_roots = scan_roots(anti, 1e-6, 33.0, 33001);
  roots.insert(roots.end(), anti_roots.begin(), anti_roots.end());
  std::sort(roots.begin(), roots.end());
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double lam = roots[i] * roots[i];
    worst = std::max(worst, std::abs(ds.eigenvalues[i] - lam) / lam);
  }
  s.add("triangular-closed-form-oracle", worst, 1e-6,
        "independent Bessel characteristic, n = 1..10, truncation 40");
}

// ---- remaining structural checks ----

void check_unit_spectrum(Suite& s) {
  double worst = 0.0;
  for (double L : {1.0, 2.0}) {
    Problem unit("unit", 2000, 120, L);
    const double rho_max = 31.0 * kPi / L;
    auto ds = find_eigenvalues(unit.table, unit.reciprocal,
                               BoundaryCondition::Dirichlet, rho_max, 800, 120);
    for (int i = 0; i < 30 && i < ds.count(); ++i) {
      const double lam = std::pow((i + 1) * kPi / L, 2);
      worst = std::max(worst, std::abs(ds.eigenvalues[i] - lam) / lam);
    }
  }
  s.add("unit-exact-spectrum", worst, 1e-10, "lambda_n = (n pi/L)^2, L in {1,2}");
}

void check_coefficient_equivalence(Suite& s) {
  // The recursion and the Fourier-Legendre formula are compared on a denser
  // mesh than the solver default: both formulas lose meaning inside
  // x < 10 h m (the recursion zeroes it, the Legendre sum cancels
  // catastrophically), and the first exposed nodes converge ~ O(h).
  double worst = 0.0;
  for (const char* name : {"unit", "example1", "triangular"}) {
    Problem p(name, 8000, 22);
    const auto fp = compute_formal_powers(p.profile, 21);
    for (int m = 0; m <= 20; ++m) {
      const auto direct = alpha_from_formal_powers(fp, m);
      const double threshold = 10.0 * p.profile.mesh.step * m;
      for (int j = 1; j < p.profile.mesh.points; ++j) {
        if (p.profile.mesh.node(j) < threshold) continue;
        worst = std::max(worst, std::abs(direct.values[j] -
                                         p.table.alpha[m].values[j]));
      }
    }
  }
  s.add("coefficient-formula-equivalence", worst, 1e-6,
        "m <= 20, three profiles, 8005-node mesh, x >= 10hm");
}

void check_neumann_duality(Suite& s, const Problem& ex1) {
  auto neumann = find_eigenvalues(ex1.table, ex1.reciprocal,
                                  BoundaryCondition::Neumann, 12.0, 400, 120);
  // Dirichlet problem with conductivity 1/kappa: swap the table roles.
  auto recip_dirichlet = find_eigenvalues(
      ex1.reciprocal, ex1.table, BoundaryCondition::Dirichlet, 12.0, 400, 120);
  double worst_ev = 0.0;
  const int n = std::min(10, std::min(neumann.count() - 1,
                                      recip_dirichlet.count()));
  for (int i = 0; i < n; ++i)
    worst_ev = std::max(worst_ev,
                        std::abs(neumann.eigenvalues[i + 1] -
                                 recip_dirichlet.eigenvalues[i]) /
                            recip_dirichlet.eigenvalues[i]);
  s.add("neumann-duality-eigenvalues", worst_ev, 1e-9,
        "positive Neumann spectrum vs reciprocal Dirichlet, n = 1..10");

  compute_normalization(neumann, ex1.table, ex1.reciprocal);
  double worst_norm = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double direct = direct_norm_quadrature(neumann, ex1.table, i);
    worst_norm = std::max(
        worst_norm, std::abs(neumann.normalization[i] - direct) / direct);
  }
  s.add("neumann-duality-normalization", worst_norm, 1e-6,
        "gamma_n = mu_n beta_n^{1/kappa} vs direct quadrature");
}

void check_orthonormality(Suite& s, const Problem& ex1,
                          SpectralDataset& ex1_ds) {
  double worst = 0.0;
  const auto gram_dev = [&](const Problem& p, SpectralDataset& ds) {
    std::vector<MeshFunction> phi;
    for (int i = 0; i < 10; ++i)
      phi.push_back(eigenfunction_samples(ds, p.table, i));
    double dev = 0.0;
    for (int a = 0; a < 10; ++a)
      for (int b = a; b < 10; ++b) {
        MeshFunction prod{p.profile.mesh,
                          std::vector<double>(p.profile.mesh.points)};
        for (int j = 0; j < p.profile.mesh.points; ++j)
          prod.values[j] = phi[a].values[j] * phi[b].values[j] *
                           p.profile.kappa.values[j];
        dev = std::max(dev, std::abs(integrate(prod) - (a == b ? 1.0 : 0.0)));
      }
    return dev;
  };

  worst = std::max(worst, gram_dev(ex1, ex1_ds));
  {
    Problem unit("unit", 2000, 120, 1.0);
    auto ds = find_eigenvalues(unit.table, unit.reciprocal,
                               BoundaryCondition::Dirichlet, 35.0, 500, 120);
    compute_normalization(ds, unit.table, unit.reciprocal);
    worst = std::max(worst, gram_dev(unit, ds));
  }
  {
    Problem tri("triangular", 2000, 120);
    auto ds = find_eigenvalues(tri.table, tri.reciprocal,
                               BoundaryCondition::Dirichlet, 35.0, 500, 120);
    compute_normalization(ds, tri.table, tri.reciprocal);
    worst = std::max(worst, gram_dev(tri, ds));
  }
  s.add("orthonormality-gram", worst, 1e-6,
        "first 10 eigenfunctions, kappa-weighted, three profiles");
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
  Suite suite;

  Problem ex1("example1", 2000, 120);
  auto ex1_ds = find_eigenvalues(ex1.table, ex1.reciprocal,
                                 BoundaryCondition::Dirichlet, 62.0, 800, 120);
  compute_normalization(ex1_ds, ex1.table, ex1.reciprocal);

  check_smooth_reference(suite, ex1_ds);
  check_exact_characteristic(suite, ex1_ds);

  {
    Problem tri("triangular", 2000, 40);
    auto tri_ds = find_eigenvalues(tri.table, tri.reciprocal,
                                   BoundaryCondition::Dirichlet, 40.0, 500, 40);
    check_triangular_reference(suite, tri_ds);
    check_triangular_oracle(suite, tri_ds);
  }

  check_unit_spectrum(suite);
  check_coefficient_equivalence(suite);
  check_goursat(suite, ex1);
  check_darboux_and_wronskian(suite, ex1);
  check_neumann_duality(suite, ex1);
  check_weyl_residues(suite, ex1, ex1_ds);
  check_orthonormality(suite, ex1, ex1_ds);
  check_asymptotics(suite, ex1_ds);

  return suite.results;
}

}  // namespace sleif
