#include "sleif/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace sleif {

namespace {

using cplx = std::complex<double>;

// Ascending series j_n(z) = z^n/(2n+1)!! * sum_k (-z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)).
// Converges fast for |z|^2 < 2n+3; the prefactor underflows harmlessly for n >> |z|.
cplx ascending_series(int n, cplx z) {
  cplx prefix = 1.0;
  for (int m = 1; m <= n; ++m) prefix *= z / double(2 * m + 1);
  cplx term = 1.0, sum = 1.0;
  const cplx zz = -0.5 * z * z;
  for (int k = 1; k <= 200; ++k) {
    term *= zz / double(k * (2 * n + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return prefix * sum;
}

cplx j0_closed(cplx z) { return std::sin(z) / z; }

cplx j1_closed(cplx z) {
  if (std::abs(z) < 0.5) return ascending_series(1, z);  // avoids 1/z cancellation
  return std::sin(z) / (z * z) - std::cos(z) / z;
}

}  // namespace

std::vector<cplx> spherical_bessel_sequence(int order_max, cplx z) {
  if (order_max < 0) throw std::invalid_argument("negative Bessel order");
  std::vector<cplx> out(order_max + 1);
  const double az = std::abs(z);
  if (az == 0.0) {
    out[0] = 1.0;
    return out;
  }

  // Start the backward recurrence well past both the requested order and the
  // turning point n ~ |z|, where the minimal solution starts to dominate.
  const int start =
      std::max(order_max, static_cast<int>(std::ceil(az))) +
      static_cast<int>(std::ceil(15.0 + az));
  cplx upper = 0.0;              // b_{n+1}
  cplx cur = 1e-280;             // b_n, arbitrary seed; start > order_max always
  for (int n = start; n >= 1; --n) {
    cplx lower = double(2 * n + 1) / z * cur - upper;
    if (n - 1 <= order_max) out[n - 1] = lower;
    if (std::abs(lower) > 1e250) {
      lower *= 1e-250;
      cur *= 1e-250;
      for (int m = n; m <= order_max; ++m) out[m] *= 1e-250;
      if (n - 1 <= order_max) out[n - 1] = lower;
    }
    upper = cur;
    cur = lower;
  }

  // Normalize against whichever closed form sits on the larger raw value.
  cplx scale;
  if (order_max >= 1 && std::abs(out[1]) > std::abs(out[0]))
    scale = j1_closed(z) / out[1];
  else
    scale = j0_closed(z) / out[0];
  for (auto& v : out) v *= scale;

  // Small-argument regime: the recurrence normalization loses meaning once
  // the true value underflows toward z^n/(2n+1)!!.
  for (int n = 0; n <= order_max; ++n)
    if (az < 1e-4 * double(2 * n + 1)) out[n] = ascending_series(n, z);
  return out;
}

std::vector<double> spherical_bessel_sequence(int order_max, double z) {
  auto seq = spherical_bessel_sequence(order_max, cplx(z, 0.0));
  std::vector<double> out(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) out[i] = seq[i].real();
  return out;
}

std::vector<std::vector<double>> legendre_coefficients(int degree_max) {
  if (degree_max < 0) throw std::invalid_argument("negative Legendre degree");
  std::vector<std::vector<double>> p(degree_max + 1);
  p[0] = {1.0};
  if (degree_max >= 1) p[1] = {0.0, 1.0};
  for (int n = 1; n < degree_max; ++n) {
    std::vector<double> next(n + 2, 0.0);
    for (int k = 0; k <= n; ++k) next[k + 1] += (2 * n + 1) * p[n][k];
    for (int k = 0; k < n; ++k) next[k] -= n * p[n - 1][k];
    for (double& c : next) c /= n + 1;
    p[n + 1] = std::move(next);
  }
  return p;
}

}  // namespace sleif
