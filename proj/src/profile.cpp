#include "sleif/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sleif {

namespace {

ConductivityProfile sample_profile(UniformMesh mesh,
                                   const std::function<double(double)>& kappa,
                                   const std::function<double(double)>& kappa_prime,
                                   std::string label) {
  ConductivityProfile p;
  p.mesh = mesh;
  p.kappa.mesh = mesh;
  p.kappa_prime.mesh = mesh;
  p.kappa.values.resize(mesh.points);
  p.kappa_prime.values.resize(mesh.points);
  for (int j = 0; j < mesh.points; ++j) {
    const double x = mesh.node(j);
    p.kappa.values[j] = kappa(x);
    p.kappa_prime.values[j] = kappa_prime(x);
  }
  const double c = p.kappa.values[0];
  if (!(c > 0.0))
    throw std::invalid_argument("invalid profile: kappa(0) must be positive");
  for (double v : p.kappa.values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("invalid profile: kappa must stay positive on [0, L]");
  for (double& v : p.kappa.values) v /= c;
  for (double& v : p.kappa_prime.values) v /= c;
  p.normalization_factor = c;
  p.label = std::move(label);
  return p;
}

int find_piece(const std::vector<double>& breaks, double x) {
  int i = 0;
  while (i + 2 < static_cast<int>(breaks.size()) && x >= breaks[i + 1]) ++i;
  return i;
}

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

double poly_deriv_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t k = c.size(); k-- > 1;) v = v * x + k * c[k];
  return v;
}

}  // namespace

ConductivityProfile profile_from_closed_form(
    double length, int requested_points,
    const std::function<double(double)>& kappa,
    const std::function<double(double)>& kappa_prime, std::string label) {
  return sample_profile(build_mesh(length, requested_points), kappa,
                        kappa_prime, std::move(label));
}

double PiecewisePolynomial::value(double x) const {
  return poly_eval(pieces[find_piece(breakpoints, x)], x);
}

double PiecewisePolynomial::derivative(double x) const {
  // Interior breakpoints average the one-sided slopes; the value enters only
  // through integrals, where the averaged sample keeps the panel errors on
  // the two sides cancelling.  Tolerant match: mesh nodes land on breakpoints
  // only up to roundoff.
  for (size_t i = 1; i + 1 < breakpoints.size(); ++i)
    if (std::abs(x - breakpoints[i]) <= 1e-9 * std::max(1.0, std::abs(breakpoints[i])))
      return 0.5 * (poly_deriv_eval(pieces[i - 1], x) +
                    poly_deriv_eval(pieces[i], x));
  return poly_deriv_eval(pieces[find_piece(breakpoints, x)], x);
}

ConductivityProfile profile_from_piecewise(const PiecewisePolynomial& poly,
                                           int requested_points,
                                           std::string label) {
  const auto& b = poly.breakpoints;
  if (b.size() < 2 || poly.pieces.size() != b.size() - 1)
    throw std::invalid_argument("piecewise spec needs n breakpoints and n-1 pieces");
  if (b.front() != 0.0)
    throw std::invalid_argument("piecewise breakpoints must start at 0");
  for (size_t i = 1; i < b.size(); ++i)
    if (!(b[i] > b[i - 1]))
      throw std::invalid_argument("piecewise breakpoints must be strictly increasing");
  for (size_t i = 1; i + 1 < b.size(); ++i) {
    const double left = poly_eval(poly.pieces[i - 1], b[i]);
    const double right = poly_eval(poly.pieces[i], b[i]);
    if (std::abs(left - right) > 1e-12 * std::max({1.0, std::abs(left), std::abs(right)}))
      throw std::invalid_argument("piecewise conductivity must be continuous at breakpoints");
  }
  return sample_profile(
      build_mesh(b.back(), requested_points),
      [&poly](double x) { return poly.value(x); },
      [&poly](double x) { return poly.derivative(x); }, std::move(label));
}

ConductivityProfile profile_triangular(int requested_points) {
  PiecewisePolynomial poly{{0.0, 0.5, 1.0}, {{1.0, 1.0}, {2.0, -1.0}}};
  return profile_from_piecewise(poly, requested_points, "triangular");
}

ConductivityProfile reciprocal_profile(const ConductivityProfile& p) {
  ConductivityProfile r;
  r.mesh = p.mesh;
  r.kappa.mesh = p.mesh;
  r.kappa_prime.mesh = p.mesh;
  r.kappa.values.resize(p.mesh.points);
  r.kappa_prime.values.resize(p.mesh.points);
  for (int j = 0; j < p.mesh.points; ++j) {
    const double k = p.kappa.values[j];
    r.kappa.values[j] = 1.0 / k;
    r.kappa_prime.values[j] = -p.kappa_prime.values[j] / (k * k);
  }
  r.label = p.label + "_reciprocal";
  r.normalization_factor = 1.0;  // kappa(0) = 1 already
  return r;
}

double builtin_length(const std::string& name) {
  if (name == "example1") return std::numbers::pi;
  return 1.0;
}

ConductivityProfile builtin_profile(const std::string& name,
                                    int requested_points, double length) {
  if (length == 0.0) length = builtin_length(name);
  if (name == "unit")
    return profile_from_closed_form(
        length, requested_points, [](double) { return 1.0; },
        [](double) { return 0.0; }, "unit");
  if (name == "example1")
    return profile_from_closed_form(
        length, requested_points,
        [](double x) { return std::pow(1.0 + x, 4); },
        [](double x) { return 4.0 * std::pow(1.0 + x, 3); }, "example1");
  if (name == "triangular") {
    if (length != 1.0)
      throw std::invalid_argument("triangular profile is defined on [0, 1]");
    return profile_triangular(requested_points);
  }
  throw std::invalid_argument("unknown builtin profile: " + name);
}

}  // namespace sleif
