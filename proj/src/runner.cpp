#include "sleif/runner.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sleif/verify.hpp"

namespace sleif {

namespace {

// 14 significant digits, matching the reference output precision.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14g", v);
  return buf;
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class OutputSet {
 public:
  explicit OutputSet(const RunConfig& cfg) : cfg_(cfg) {
    start_ = std::chrono::steady_clock::now();
    std::filesystem::create_directories(cfg.output_dir);
  }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::path(cfg_.output_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    char hash[32];
    std::snprintf(hash, sizeof hash, "fnv1a:%016" PRIx64, fnv1a(content));
    manifest_files_ += "file: " + name + " " + hash + "\n";
    artifacts_.files.push_back(path.string());
    return path.string();
  }

  void note(const std::string& key, const std::string& value) {
    notes_ += key + ": " + value + "\n";
  }

  RunArtifacts finish(const std::string& kind) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    std::string manifest = "artifact: " + kind + "\n" + notes_;
    manifest += "wall_ms: " + std::to_string(elapsed.count()) + "\n";
    manifest += manifest_files_;
    const auto path = std::filesystem::path(cfg_.output_dir) / "manifest.txt";
    std::ofstream out(path, std::ios::binary);
    out << manifest;
    artifacts_.files.push_back(path.string());
    return artifacts_;
  }

 private:
  const RunConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  std::string notes_;
  std::string manifest_files_;
  RunArtifacts artifacts_;
};

void note_common(OutputSet& out, const RunConfig& cfg,
                 const ConductivityProfile& p) {
  out.note("profile", p.label);
  out.note("bc", to_string(cfg.bc));
  out.note("L", fmt(p.mesh.length));
  out.note("mesh_points", std::to_string(p.mesh.points));
  out.note("mesh_step", fmt(p.mesh.step));
  out.note("N", std::to_string(cfg.coefficient_count));
  out.note("kappa_normalization_factor", fmt(p.normalization_factor));
  out.note("truncation_scale_diagnostic", fmt(error_bound_diagnostic(p)));
}

struct Pipeline {
  ConductivityProfile profile;
  NsbfCoefficientTable table;
  NsbfCoefficientTable reciprocal;

  explicit Pipeline(const RunConfig& cfg)
      : profile(cfg.resolve_profile()),
        table(compute_coefficients(profile, cfg.coefficient_count)),
        reciprocal(compute_coefficients(reciprocal_profile(profile),
                                        cfg.coefficient_count)) {}
};

SpectralDataset solve(const RunConfig& cfg, const Pipeline& pipe) {
  SpectralDataset ds =
      find_eigenvalues(pipe.table, pipe.reciprocal, cfg.bc, cfg.rho_max,
                       cfg.scan_points, cfg.coefficient_count);
  compute_normalization(ds, pipe.table, pipe.reciprocal);
  return ds;
}

int first_index(BoundaryCondition bc) {
  return bc == BoundaryCondition::Neumann ? 0 : 1;
}

}  // namespace

RunArtifacts run_coeffs(const RunConfig& cfg) {
  OutputSet out(cfg);
  Pipeline pipe(cfg);
  note_common(out, cfg, pipe.profile);

  std::string csv = "x";
  for (int m = 0; m <= pipe.table.order_max; ++m)
    csv += ",sigma_" + std::to_string(m);
  csv += "\n";
  for (int j = 0; j < pipe.profile.mesh.points; ++j) {
    csv += fmt(pipe.profile.mesh.node(j));
    for (int m = 0; m <= pipe.table.order_max; ++m)
      csv += "," + fmt(pipe.table.sigma[m].values[j]);
    csv += "\n";
  }
  out.write("coefficients.csv", csv);
  return out.finish("coefficients");
}

RunArtifacts run_eigs(const RunConfig& cfg, bool with_eigenfunctions) {
  OutputSet out(cfg);
  Pipeline pipe(cfg);
  note_common(out, cfg, pipe.profile);
  SpectralDataset ds = solve(cfg, pipe);

  out.note("rho_max", fmt(cfg.rho_max));
  out.note("scan_points", std::to_string(cfg.scan_points));
  out.note("scan_points_used", std::to_string(ds.scan_points_used));
  out.note("eigenvalue_count", std::to_string(ds.count()));
  double max_res = 0.0;
  for (double r : ds.residuals) max_res = std::max(max_res, r);
  out.note("max_characteristic_residual", fmt(max_res));
  for (const auto& w : ds.warnings) out.note("warning", w);

  std::string csv = "n,rho_n,lambda_n,beta_n,residual\n";
  const int base = first_index(cfg.bc);
  for (int i = 0; i < ds.count(); ++i) {
    csv += std::to_string(base + i) + "," + fmt(ds.rho[i]) + "," +
           fmt(ds.eigenvalues[i]) + "," + fmt(ds.normalization[i]) + "," +
           fmt(ds.residuals[i]) + "\n";
  }
  out.write("eigenvalues.csv", csv);

  if (with_eigenfunctions) {
    const int count = std::min(cfg.eigenfunction_count, ds.count());
    std::string efcsv = "x";
    for (int i = 0; i < count; ++i)
      efcsv += ",phi_" + std::to_string(base + i);
    efcsv += "\n";
    std::vector<MeshFunction> funcs;
    funcs.reserve(count);
    for (int i = 0; i < count; ++i)
      funcs.push_back(eigenfunction_samples(ds, pipe.table, i));
    for (int j = 0; j < pipe.profile.mesh.points; ++j) {
      efcsv += fmt(pipe.profile.mesh.node(j));
      for (int i = 0; i < count; ++i) efcsv += "," + fmt(funcs[i].values[j]);
      efcsv += "\n";
    }
    out.write("eigenfunctions.csv", efcsv);
  }
  return out.finish("eigenvalues");
}

RunArtifacts run_weyl(const RunConfig& cfg) {
  if (cfg.bc != BoundaryCondition::Dirichlet &&
      cfg.bc != BoundaryCondition::Neumann)
    throw config_error("weyl requires bc = dirichlet or neumann");
  OutputSet out(cfg);
  Pipeline pipe(cfg);
  note_common(out, cfg, pipe.profile);

  WeylGrid grid = weyl_grid(pipe.table, pipe.reciprocal, cfg.weyl, cfg.bc,
                            cfg.coefficient_count);
  out.note("weyl_re_range", fmt(cfg.weyl.re_min) + " .. " + fmt(cfg.weyl.re_max));
  out.note("weyl_im_range", fmt(cfg.weyl.im_min) + " .. " + fmt(cfg.weyl.im_max));
  out.note("weyl_poles_in_range", std::to_string(grid.poles.size()));

  std::string csv = "re_lambda,im_lambda,re_M,im_M,near_pole_flag\n";
  const double dre = (cfg.weyl.re_max - cfg.weyl.re_min) /
                     std::max(1, cfg.weyl.n_re - 1);
  const double dim = cfg.weyl.n_im > 1 ? (cfg.weyl.im_max - cfg.weyl.im_min) /
                                             (cfg.weyl.n_im - 1)
                                       : 0.0;
  for (int r = 0; r < cfg.weyl.n_im; ++r)
    for (int c = 0; c < cfg.weyl.n_re; ++c) {
      const size_t idx = static_cast<size_t>(r) * cfg.weyl.n_re + c;
      csv += fmt(cfg.weyl.re_min + c * dre) + "," +
             fmt(cfg.weyl.im_min + r * dim) + "," +
             fmt(grid.values[idx].real()) + "," + fmt(grid.values[idx].imag()) +
             "," + std::to_string(int(grid.near_pole[idx])) + "\n";
    }
  out.write("weyl_grid.csv", csv);

  // Denser slice along the real axis, where the poles show up as sign jumps.
  WeylGridSpec slice_spec = cfg.weyl;
  slice_spec.im_min = slice_spec.im_max = 0.0;
  slice_spec.n_im = 1;
  slice_spec.n_re = 4 * (cfg.weyl.n_re - 1) + 1;
  WeylGrid slice = weyl_grid(pipe.table, pipe.reciprocal, slice_spec, cfg.bc,
                             cfg.coefficient_count);
  const double dre_s = (slice_spec.re_max - slice_spec.re_min) /
                       (slice_spec.n_re - 1);
  std::string scsv = "re_lambda,re_M,im_M,near_pole_flag\n";
  for (int c = 0; c < slice_spec.n_re; ++c)
    scsv += fmt(slice_spec.re_min + c * dre_s) + "," +
            fmt(slice.values[c].real()) + "," + fmt(slice.values[c].imag()) +
            "," + std::to_string(int(slice.near_pole[c])) + "\n";
  out.write("weyl_slice.csv", scsv);

  std::string pcsv = "n,lambda_n\n";
  for (size_t i = 0; i < slice.poles.size(); ++i)
    pcsv += std::to_string(i + first_index(cfg.bc)) + "," +
            fmt(slice.poles[i]) + "\n";
  out.write("weyl_poles.csv", pcsv);
  return out.finish("weyl");
}

bool run_verify(std::ostream& out) {
  const auto checks = run_acceptance_checks();
  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  delta=" << c.delta
        << " tol=" << c.tolerance;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    all = all && c.passed;
  }
  out << (all ? "verification passed" : "verification FAILED") << "\n";
  return all;
}

}  // namespace sleif
