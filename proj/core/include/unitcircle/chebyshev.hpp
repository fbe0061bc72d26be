#pragma once

#include <vector>

#include "unitcircle/polynomial.hpp"
#include "unitcircle/rational.hpp"

namespace unitcircle {

/// Chebyshev polynomial of the second kind, any integer index.
/// Negative indices follow U_{-n} = -U_{n-2}; in particular U_{-1} = 0.
Polynomial chebyshev_u(int n);

/// Chebyshev polynomial of the first kind, T_0 = 1 and
/// T_n = (U_n - U_{n-2}) / 2 for n >= 1.
Polynomial chebyshev_t(int n);

/// s-th derivative of U_n from the closed double-binomial sum
///   s! * sum_j (-1)^j C(n-j, j) C(n-2j, s) 2^(n-2j) z^(n-2j-s).
/// Requires 0 <= s <= n.
Polynomial u_derivative_explicit(int n, int s);

/// Prefactor used when assembling U_n^(s) as a combination of U_{n-s-2j}.
enum class UcombPrefactor {
  kClassical,  ///< 2^s / (s-1)!
  kFactorialS  ///< 2^s / s!, the alternative bookkeeping
};

/// s-th derivative of U_n as
///   2^s/(s-1)! * sum_j (n-j)!(j+s-1)! / (j!(n-j-s+1)!) * (n-s-2j+1) * U_{n-s-2j}.
/// Requires 1 <= s <= n.
Polynomial u_derivative_ucomb(int n, int s, UcombPrefactor prefactor = UcombPrefactor::kClassical);

/// sum_{j=0}^{n-s} C(n-j, s) C(s+j, s) z^j. Palindromic, degree n - s.
Polynomial symmetrized_coeffs(int n, int s);

/// symmetrized_coeffs(n, s) / C(n, s): constant term 1, F_{n,n} = 1.
Polynomial f_ns(int n, int s);

/// 0 when n - s is odd, otherwise -2^s s! C((n+s)/2, (n-s)/2)^2.
Rational theta(int n, int s);

/// Maps a polynomial p of definite parity d (only powers d, d-2, ... occur)
/// to the polynomial z^(d/2) p((z^(1/2) + z^(-1/2)) / 2), computed as
/// sum_k c_{d-2k} z^k ((1+z)/2)^(d-2k). Throws std::invalid_argument when p
/// has mixed parity.
Polynomial half_angle_substitute(const Polynomial& p);

struct PositiveZeroSet {
  std::vector<double> values;  ///< ascending, each in (0, 1)
  double tol = 1e-13;
};

inline constexpr double kDefaultZeroTol = 1e-13;

/// Positive zeros of U_n^(s), floor((n-s)/2) of them, each located to within
/// tol. Requires 0 <= s < n. Throws IndexOutOfRange or ToleranceNotReached.
PositiveZeroSet u_derivative_positive_zeros(int n, int s, double tol = kDefaultZeroTol);

/// Coefficients of F_{n,s} rebuilt from the zeros:
///   (1+z if n-s odd) * prod_j (z^2 + 1 + 2z(1 - 2 nu_j^2)).
std::vector<double> f_ns_from_zeros(int n, int s, const PositiveZeroSet& zeros);

void check_derivative_index(int n, int s, int min_s = 0);

}  // namespace unitcircle
