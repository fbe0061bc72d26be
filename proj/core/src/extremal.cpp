#include "unitcircle/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unitcircle/chebyshev.hpp"
#include "unitcircle/errors.hpp"

namespace unitcircle {

GammaVector extremal_gamma(int n, int s) {
  check_derivative_index(n, s);
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) {
    Rational v(binomial(s, j) * binomial(n + s + 1, j), binomial(n, j));
    v.canonicalize();
    g.push_back(v);
  }
  return GammaVector(n, std::move(g));
}

BoundBox bound_box(int n, int s) {
  check_derivative_index(n, s, 1);
  return BoundBox{n, s, extremal_gamma(n, s).values()};
}

bool check_gamma_bounds(const GammaVector& g) {
  if (g.s() == 0) return true;
  const BoundBox box = bound_box(g.n(), g.s());
  for (int j = 1; j <= g.s(); ++j)
    if (abs(g[static_cast<std::size_t>(j)]) > box.bound(j)) return false;
  return true;
}

Polynomial extremal_closed_form(int n, int s) {
  check_derivative_index(n, s);
  const int deg = n + s + 1;
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= s; ++j) {
    Rational w(binomial(n + s + 1, j) * binomial(n - j, n - s));
    if (j % 2 == 1) w = -w;
    c[static_cast<std::size_t>(j)] += w;
    c[static_cast<std::size_t>(deg - j)] -= w;
  }
  return Polynomial(std::move(c)) / Rational(binomial(n, s));
}

double scaled_max_deviation(const std::vector<double>& approx, const Polynomial& exact) {
  const std::size_t len = std::max(approx.size(), exact.coeffs().size());
  double scale = 1.0;
  for (const auto& c : exact.coeffs()) scale = std::max(scale, std::fabs(c.get_d()));
  double worst = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = i < approx.size() ? approx[i] : 0.0;
    // Difference taken exactly so that large coefficients do not hide error.
    const Rational diff = Rational(a) - exact.coeff(i);
    worst = std::max(worst, std::fabs(diff.get_d()));
  }
  return worst / scale;
}

ExtremalFactorization extremal_factorization(int n, int s, double tol, double root_tol) {
  check_derivative_index(n, s);
  ExtremalFactorization out;
  PositiveZeroSet zeros;
  if (s < n) zeros = u_derivative_positive_zeros(n, s, root_tol);
  out.nu = zeros.values;

  std::vector<double> f = f_ns_from_zeros(n, s, zeros);
  // (1 - z)^(2s+1) has integer coefficients, exact in double for s <= 25.
  std::vector<double> lead(static_cast<std::size_t>(2 * s + 2));
  for (int k = 0; k <= 2 * s + 1; ++k) {
    const double b = binomial(2 * s + 1, k).get_d();
    lead[static_cast<std::size_t>(k)] = (k % 2 == 0) ? b : -b;
  }
  out.coeffs.assign(lead.size() + f.size() - 1, 0.0);
  for (std::size_t i = 0; i < lead.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out.coeffs[i + j] += lead[i] * f[j];

  out.max_deviation = scaled_max_deviation(out.coeffs, build_p(extremal_gamma(n, s)));
  if (!(out.max_deviation < tol)) {
    std::ostringstream msg;
    msg << "extremal factorization for N=" << n << ", s=" << s << " deviates by " << out.max_deviation
        << " (tol " << tol << ")";
    throw ToleranceNotReached(msg.str());
  }
  return out;
}

}  // namespace unitcircle
