#include "sleif/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sleif {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& where) {
  try {
    size_t consumed = 0;
    const double d = std::stod(v, &consumed);
    if (consumed != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw config_error(where + ": not a number: '" + v + "'");
  }
}

int parse_int(const std::string& v, const std::string& where) {
  const double d = parse_double(v, where);
  const int i = static_cast<int>(d);
  if (i != d) throw config_error(where + ": not an integer: '" + v + "'");
  return i;
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw config_error(where + ": empty list entry");
    out.push_back(parse_double(item, where));
  }
  if (out.empty()) throw config_error(where + ": empty list");
  return out;
}

}  // namespace

BoundaryCondition parse_boundary_condition(const std::string& name) {
  if (name == "dirichlet") return BoundaryCondition::Dirichlet;
  if (name == "neumann") return BoundaryCondition::Neumann;
  if (name == "dirichlet-neumann") return BoundaryCondition::DirichletNeumann;
  if (name == "neumann-dirichlet") return BoundaryCondition::NeumannDirichlet;
  throw config_error("unknown boundary condition '" + name +
                     "' (expected dirichlet, neumann, dirichlet-neumann or "
                     "neumann-dirichlet)");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> pieces;

  std::stringstream stream(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw config_error(where + ": empty value for '" + key + "'");

    if (key == "profile") cfg.profile = value;
    else if (key == "L") cfg.length = parse_double(value, where);
    else if (key == "mesh_points") cfg.mesh_points = parse_int(value, where);
    else if (key == "N") cfg.coefficient_count = parse_int(value, where);
    else if (key == "rho_max") cfg.rho_max = parse_double(value, where);
    else if (key == "scan_points") cfg.scan_points = parse_int(value, where);
    else if (key == "bc") {
      try {
        cfg.bc = parse_boundary_condition(value);
      } catch (const config_error& e) {
        throw config_error(where + ": " + e.what());
      }
    } else if (key == "eigenfunctions")
      cfg.eigenfunction_count = parse_int(value, where);
    else if (key == "out_dir") cfg.output_dir = value;
    else if (key == "weyl_re_min") cfg.weyl.re_min = parse_double(value, where);
    else if (key == "weyl_re_max") cfg.weyl.re_max = parse_double(value, where);
    else if (key == "weyl_im_max") cfg.weyl.im_max = parse_double(value, where);
    else if (key == "weyl_n_re") cfg.weyl.n_re = parse_int(value, where);
    else if (key == "weyl_n_im") cfg.weyl.n_im = parse_int(value, where);
    else if (key == "breakpoints") breakpoints = parse_list(value, where);
    else if (key == "piece") pieces.push_back(parse_list(value, where));
    else throw config_error(where + ": unknown key '" + key + "'");
  }

  if (cfg.profile == "piecewise") {
    if (breakpoints.empty() || pieces.empty())
      throw config_error("piecewise profile needs 'breakpoints' and 'piece' lines");
    if (pieces.size() + 1 != breakpoints.size())
      throw config_error("piecewise profile needs one piece per breakpoint interval");
    for (size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i] > breakpoints[i - 1]))
        throw config_error("breakpoints must be strictly increasing");
    if (breakpoints.front() != 0.0)
      throw config_error("breakpoints must start at 0");
    if (cfg.length != 0.0 && cfg.length != breakpoints.back())
      throw config_error("L disagrees with the last breakpoint");
    cfg.piecewise = PiecewisePolynomial{breakpoints, pieces};
  } else if (!breakpoints.empty() || !pieces.empty()) {
    throw config_error("breakpoints/piece lines require profile = piecewise");
  }

  if (cfg.mesh_points < 7) throw config_error("mesh_points must be >= 7");
  if (cfg.coefficient_count < 0) throw config_error("N must be >= 0");
  if (!(cfg.rho_max > 0.0)) throw config_error("rho_max must be positive");
  if (cfg.scan_points < 2) throw config_error("scan_points must be >= 2");
  if (cfg.eigenfunction_count < 0) throw config_error("eigenfunctions must be >= 0");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

double RunConfig::resolved_length() const {
  if (profile == "piecewise") {
    if (!piecewise) throw config_error("piecewise profile spec missing");
    return piecewise->breakpoints.back();
  }
  return length != 0.0 ? length : builtin_length(profile);
}

ConductivityProfile RunConfig::resolve_profile() const {
  if (profile == "piecewise") {
    if (!piecewise) throw config_error("piecewise profile spec missing");
    return profile_from_piecewise(*piecewise, mesh_points, "piecewise");
  }
  return builtin_profile(profile, mesh_points, resolved_length());
}

}  // namespace sleif
