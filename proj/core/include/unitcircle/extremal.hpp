#pragma once

#include <vector>

#include "unitcircle/family.hpp"
#include "unitcircle/polynomial.hpp"
#include "unitcircle/rational.hpp"

namespace unitcircle {

/// gamma_j = C(s,j) C(N+s+1,j) / C(N,j), j = 0..s. Throws IndexOutOfRange.
GammaVector extremal_gamma(int n, int s);

/// Per-coordinate bounds on |gamma_j| that every all-on-circle member obeys.
/// bounds[0] is 1 so that bounds[j] lines up with gamma_j.
struct BoundBox {
  int n = 0;
  int s = 0;
  std::vector<Rational> bounds;

  const Rational& bound(int j) const { return bounds.at(static_cast<std::size_t>(j)); }
};

/// Requires 1 <= s <= N. Throws IndexOutOfRange.
BoundBox bound_box(int n, int s);

/// |gamma_j| <= bound_j for every j >= 1.
bool check_gamma_bounds(const GammaVector& g);

/// C(N,s)^-1 sum_{j=0}^{s} (-1)^j C(N+s+1,j) C(N-j,N-s) (z^j - z^(N+s+1-j)).
Polynomial extremal_closed_form(int n, int s);

struct ExtremalFactorization {
  /// (1-z)^(2s+1) (1+z if N-s odd) prod_j (z^2 + 1 + 2z(1 - 2 nu_j^2))
  std::vector<double> coeffs;
  std::vector<double> nu;
  /// max |coeffs - exact| / max(1, max |exact|), exact = build_p(extremal_gamma)
  double max_deviation = 0.0;
};

inline constexpr double kDefaultFactorizationTol = 1e-9;

/// Numerically assembles the extremal polynomial from the positive zeros of
/// U_N^(s). Throws ToleranceNotReached when max_deviation >= tol.
ExtremalFactorization extremal_factorization(int n, int s, double tol = kDefaultFactorizationTol,
                                             double root_tol = 1e-13);

/// max |approx_i - exact_i| over max(1, max |exact_i|).
double scaled_max_deviation(const std::vector<double>& approx, const Polynomial& exact);

}  // namespace unitcircle
