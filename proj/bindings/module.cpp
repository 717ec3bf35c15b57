#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sleif/nsbf.hpp"
#include "sleif/profile.hpp"
#include "sleif/runner.hpp"
#include "sleif/specfun.hpp"
#include "sleif/spectral.hpp"
#include "sleif/spps.hpp"
#include "sleif/verify.hpp"
#include "sleif/weyl.hpp"

#include <sstream>

namespace py = pybind11;
using namespace sleif;
using cplx = std::complex<double>;

namespace {

py::array_t<double> as_array(const std::vector<double>& v) {
  return py::array_t<double>(py::ssize_t(v.size()), v.data());
}

py::array_t<double> nodes_array(const UniformMesh& m) {
  py::array_t<double> out(m.points);
  auto buf = out.mutable_unchecked<1>();
  for (int j = 0; j < m.points; ++j) buf(j) = m.node(j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral solver for -(kappa u')' = lambda kappa u on [0, L]";

  py::class_<UniformMesh>(m, "UniformMesh")
      .def_readonly("length", &UniformMesh::length)
      .def_readonly("points", &UniformMesh::points)
      .def_readonly("step", &UniformMesh::step)
      .def("nodes", &nodes_array);

  py::class_<MeshFunction>(m, "MeshFunction")
      .def_readonly("mesh", &MeshFunction::mesh)
      .def_property_readonly(
          "values", [](const MeshFunction& f) { return as_array(f.values); });

  py::class_<ConductivityProfile>(m, "ConductivityProfile")
      .def_readonly("mesh", &ConductivityProfile::mesh)
      .def_readonly("kappa", &ConductivityProfile::kappa)
      .def_readonly("kappa_prime", &ConductivityProfile::kappa_prime)
      .def_readonly("label", &ConductivityProfile::label)
      .def_readonly("normalization_factor",
                    &ConductivityProfile::normalization_factor);

  py::class_<FormalPowerTable>(m, "FormalPowerTable")
      .def_readonly("profile", &FormalPowerTable::profile)
      .def_property_readonly("order_max", &FormalPowerTable::order_max)
      .def("power", [](const FormalPowerTable& t, int k) {
        return as_array(t.powers.at(k).values);
      });

  py::class_<NsbfCoefficientTable>(m, "NsbfCoefficientTable")
      .def_readonly("profile", &NsbfCoefficientTable::profile)
      .def_readonly("order_max", &NsbfCoefficientTable::order_max)
      .def("sigma", [](const NsbfCoefficientTable& t, int k) {
        return as_array(t.sigma.at(k).values);
      })
      .def("alpha", [](const NsbfCoefficientTable& t, int k) {
        return as_array(t.alpha.at(k).values);
      });

  py::enum_<BoundaryCondition>(m, "BoundaryCondition")
      .value("dirichlet", BoundaryCondition::Dirichlet)
      .value("neumann", BoundaryCondition::Neumann)
      .value("dirichlet_neumann", BoundaryCondition::DirichletNeumann)
      .value("neumann_dirichlet", BoundaryCondition::NeumannDirichlet);

  py::class_<SpectralDataset>(m, "SpectralDataset")
      .def_readonly("bc", &SpectralDataset::bc)
      .def_property_readonly(
          "eigenvalues",
          [](const SpectralDataset& d) { return as_array(d.eigenvalues); })
      .def_property_readonly(
          "rho", [](const SpectralDataset& d) { return as_array(d.rho); })
      .def_property_readonly(
          "normalization",
          [](const SpectralDataset& d) { return as_array(d.normalization); })
      .def_property_readonly(
          "residuals",
          [](const SpectralDataset& d) { return as_array(d.residuals); })
      .def_readonly("terms_used", &SpectralDataset::terms_used)
      .def_readonly("warnings", &SpectralDataset::warnings);

  m.def("build_mesh", &build_mesh, py::arg("length"), py::arg("points"));
  m.def("cumulative_integral", [](const MeshFunction& f) {
    return cumulative_integral(f);
  });
  m.def("mesh_function", [](const UniformMesh& mesh, std::vector<double> v) {
    return MeshFunction{mesh, std::move(v)};
  });
  m.def("integrate", &integrate);

  m.def("spherical_bessel_sequence",
        [](int order_max, cplx z) {
          return spherical_bessel_sequence(order_max, z);
        },
        py::arg("order_max"), py::arg("z"));
  m.def("legendre_coefficients", &legendre_coefficients);

  m.def("builtin_profile", &builtin_profile, py::arg("name"),
        py::arg("points"), py::arg("length") = 0.0);
  m.def("profile_from_closed_form", &profile_from_closed_form,
        py::arg("length"), py::arg("points"), py::arg("kappa"),
        py::arg("kappa_prime"), py::arg("label") = "custom");
  m.def("profile_triangular", &profile_triangular, py::arg("points"));
  m.def("reciprocal_profile", &reciprocal_profile);

  m.def("compute_formal_powers", &compute_formal_powers, py::arg("profile"),
        py::arg("order_max"));
  m.def("spps_eval", &spps_eval, py::arg("table"), py::arg("rho"),
        py::arg("node"));

  m.def("compute_coefficients", &compute_coefficients, py::arg("profile"),
        py::arg("order_max"));
  m.def("alpha_from_formal_powers", &alpha_from_formal_powers,
        py::arg("formal_powers"), py::arg("n"));
  m.def("goursat_residual", &goursat_residual, py::arg("table"),
        py::arg("node"), py::arg("terms"));
  m.def("sine_solution", &sine_solution, py::arg("table"), py::arg("rho"),
        py::arg("node"), py::arg("terms"));
  m.def("cosine_solution", &cosine_solution, py::arg("table"), py::arg("rho"),
        py::arg("node"), py::arg("terms"));
  m.def("exp_solution", &exp_solution, py::arg("table"), py::arg("rho"),
        py::arg("node"), py::arg("terms"));
  m.def("sine_solution_deriv", &sine_solution_deriv, py::arg("table"),
        py::arg("reciprocal"), py::arg("rho"), py::arg("node"),
        py::arg("terms"));
  m.def("cosine_solution_deriv", &cosine_solution_deriv, py::arg("table"),
        py::arg("reciprocal"), py::arg("rho"), py::arg("node"),
        py::arg("terms"));

  m.def("characteristic_dirichlet", &characteristic_dirichlet,
        py::arg("table"), py::arg("rho"), py::arg("terms"));
  m.def("find_eigenvalues", &find_eigenvalues, py::arg("table"),
        py::arg("reciprocal"), py::arg("bc"), py::arg("rho_max"),
        py::arg("scan_points"), py::arg("terms"));
  m.def("compute_normalization", &compute_normalization, py::arg("dataset"),
        py::arg("table"), py::arg("reciprocal"));
  m.def("eigenfunction_samples", &eigenfunction_samples, py::arg("dataset"),
        py::arg("table"), py::arg("index"));
  m.def("asymptotic_gaps", &asymptotic_gaps);
  m.def("error_bound_diagnostic", &error_bound_diagnostic);

  m.def("weyl_dirichlet",
        [](const NsbfCoefficientTable& t, cplx lambda, int terms) {
          return weyl_dirichlet(t, lambda, terms);
        },
        py::arg("table"), py::arg("lam"), py::arg("terms"));
  m.def("weyl_neumann",
        [](const NsbfCoefficientTable& t, const NsbfCoefficientTable& r,
           cplx mu, int terms) { return weyl_neumann(t, r, mu, terms); },
        py::arg("table"), py::arg("reciprocal"), py::arg("mu"),
        py::arg("terms"));
  m.def("weyl_dirichlet_residue", &weyl_dirichlet_residue, py::arg("table"),
        py::arg("lambda_n"), py::arg("terms"));

  m.def("verify", []() {
    std::ostringstream report;
    const bool ok = run_verify(report);
    return py::make_tuple(ok, report.str());
  });
}
