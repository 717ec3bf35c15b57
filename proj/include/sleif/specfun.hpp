#pragma once

#include <complex>
#include <vector>

namespace sleif {

/// j_0(z)..j_order_max(z) by backward recurrence (Miller's algorithm),
/// normalized against the closed forms of j_0 and j_1.  Orders in the
/// small-argument regime |z| < 1e-4*(2n+1) are evaluated by the ascending
/// series instead.  Accurate to >= 12 significant digits for |z| <= 400,
/// order_max <= 200; orders with n >> |z| may underflow to 0.
std::vector<std::complex<double>> spherical_bessel_sequence(
    int order_max, std::complex<double> z);

/// Real-argument convenience overload; values of j_n are real for real z.
std::vector<double> spherical_bessel_sequence(int order_max, double z);

/// Monomial coefficients of P_0..P_degree_max from the three-term recurrence
/// (n+1) P_{n+1} = (2n+1) z P_n - n P_{n-1}.  Entry [n][k] multiplies z^k.
/// Coefficients grow like 2^n; double precision degrades past degree ~60.
std::vector<std::vector<double>> legendre_coefficients(int degree_max);

}  // namespace sleif
