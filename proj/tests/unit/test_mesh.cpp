#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sleif/mesh.hpp"

using namespace sleif;

namespace {

MeshFunction sample(const UniformMesh& m, double (*f)(double)) {
  MeshFunction out{m, std::vector<double>(m.points)};
  for (int j = 0; j < m.points; ++j) out.values[j] = f(m.node(j));
  return out;
}

}  // namespace

TEST_CASE("build_mesh rounds the node count up to the next 6k+1") {
  const auto m = build_mesh(1.0, 2000);
  CHECK(m.points == 2005);
  CHECK(m.step == doctest::Approx(1.0 / 2004).epsilon(1e-15));

  const auto tiny = build_mesh(1.0, 7);
  CHECK(tiny.points == 7);
  CHECK(tiny.node(1) == doctest::Approx(1.0 / 6));
  CHECK(tiny.node(6) == 1.0);

  const auto two = build_mesh(2.0, 13);
  CHECK(two.points == 13);
  CHECK(two.step == doctest::Approx(1.0 / 6));

  CHECK_THROWS_AS(build_mesh(0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(-1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(1.0, 6), std::invalid_argument);
}

TEST_CASE("cumulative integral of a constant is exact") {
  const auto m = build_mesh(1.0, 19);
  const auto F = cumulative_integral(sample(m, [](double) { return 1.0; }));
  for (int j = 0; j < m.points; ++j)
    CHECK(F.values[j] == doctest::Approx(m.node(j)).epsilon(1e-15));
}

TEST_CASE("panel rule is exact through degree six") {
  const auto m = build_mesh(1.0, 7);
  const auto F = cumulative_integral(
      sample(m, [](double x) { return std::pow(x, 5); }));
  CHECK(F.values[6] == doctest::Approx(1.0 / 6).epsilon(1e-15));

  // every monomial x^p, p <= 6, integrates to x^{p+1}/(p+1) at every node
  const auto fine = build_mesh(1.0, 31);
  for (int p = 0; p <= 6; ++p) {
    MeshFunction f{fine, std::vector<double>(fine.points)};
    for (int j = 0; j < fine.points; ++j)
      f.values[j] = std::pow(fine.node(j), p);
    const auto Fp = cumulative_integral(f);
    for (int j = 1; j < fine.points; ++j) {
      const double exact = std::pow(fine.node(j), p + 1) / (p + 1);
      CHECK(Fp.values[j] == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("cos antiderivative is reproduced to 1e-12 on the default mesh") {
  const auto m = build_mesh(1.0, 2000);
  const auto F =
      cumulative_integral(sample(m, [](double x) { return std::cos(x); }));
  double worst = 0.0;
  for (int j = 0; j < m.points; ++j)
    worst = std::max(worst, std::abs(F.values[j] - std::sin(m.node(j))));
  CHECK(worst <= 1e-12);
}

TEST_CASE("cumulative integration is linear") {
  const auto m = build_mesh(2.0, 55);
  auto f = sample(m, [](double x) { return std::exp(-x) * std::sin(3 * x); });
  auto g = sample(m, [](double x) { return 1.0 / (1.0 + x * x); });
  const double a = 2.5, b = -1.25;
  MeshFunction combo{m, std::vector<double>(m.points)};
  for (int j = 0; j < m.points; ++j)
    combo.values[j] = a * f.values[j] + b * g.values[j];
  const auto Fc = cumulative_integral(combo);
  const auto Ff = cumulative_integral(f);
  const auto Fg = cumulative_integral(g);
  for (int j = 0; j < m.points; ++j)
    CHECK(Fc.values[j] ==
          doctest::Approx(a * Ff.values[j] + b * Fg.values[j]).epsilon(1e-12));
}

TEST_CASE("antiderivative of a nonnegative low-degree integrand is nondecreasing") {
  const auto m = build_mesh(1.0, 37);
  const auto F = cumulative_integral(
      sample(m, [](double x) { return std::pow(x - 0.5, 6); }));
  for (int j = 1; j < m.points; ++j) CHECK(F.values[j] >= F.values[j - 1]);
}

TEST_CASE("malformed mesh functions are rejected") {
  const auto m = build_mesh(1.0, 13);
  MeshFunction short_fn{m, std::vector<double>(5, 1.0)};
  CHECK_THROWS_AS(cumulative_integral(short_fn), std::invalid_argument);

  MeshFunction bad_mesh{UniformMesh{1.0, 8, 1.0 / 7},
                        std::vector<double>(8, 1.0)};
  CHECK_THROWS_AS(cumulative_integral(bad_mesh), std::invalid_argument);

  MeshFunction with_nan{m, std::vector<double>(13, 1.0)};
  with_nan.values[4] = std::nan("");
  CHECK_THROWS_AS(cumulative_integral(with_nan), std::invalid_argument);
}

TEST_CASE("integrate matches the last cumulative value") {
  const auto m = build_mesh(3.0, 43);
  const auto f = sample(m, [](double x) { return std::cos(2 * x) + x; });
  CHECK(integrate(f) ==
        doctest::Approx(cumulative_integral(f).values[m.points - 1])
            .epsilon(1e-14));
}
