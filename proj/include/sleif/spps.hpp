#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "sleif/profile.hpp"

namespace sleif {

/// Thrown when a truncated power series cannot reach the requested accuracy.
class insufficient_order_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formal powers phi^(0)..phi^(K): phi^(0) = 1, phi^(1) = int 1/kappa,
/// phi^(k) = k(k-1) int (1/kappa) int kappa phi^(k-2).  For kappa = 1 they
/// reduce to x^k.
struct FormalPowerTable {
  ConductivityProfile profile;
  std::vector<MeshFunction> powers;

  int order_max() const { return static_cast<int>(powers.size()) - 1; }
};

FormalPowerTable compute_formal_powers(const ConductivityProfile& p,
                                       int order_max);

/// Truncated power-series solution sum_k (i rho)^k phi^(k)(x_j) / k!.
/// Satisfies u(0) = 1, u'(0) = i rho; accurate on compact rho sets only.
/// Throws insufficient_order_error when the crude tail bound
/// (|rho| x)^K / K! exceeds 1e-12.
std::complex<double> spps_eval(const FormalPowerTable& table,
                               std::complex<double> rho, int node);

}  // namespace sleif
