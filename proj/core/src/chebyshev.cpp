#include "unitcircle/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "unitcircle/errors.hpp"

namespace unitcircle {

void check_derivative_index(int n, int s, int min_s) {
  if (n < 0 || s < min_s || s > n)
    throw IndexOutOfRange("derivative order s=" + std::to_string(s) + " outside [" + std::to_string(min_s) +
                          ", " + std::to_string(n) + "] for N=" + std::to_string(n));
}

Polynomial chebyshev_u(int n) {
  if (n == -1) return {};
  if (n < 0) return -chebyshev_u(-n - 2);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; 2 * j <= n; ++j) {
    Integer term = binomial(n - j, j) * pow2(n - 2 * j);
    c[static_cast<std::size_t>(n - 2 * j)] = (j % 2 == 0) ? Rational(term) : Rational(-term);
  }
  return Polynomial(std::move(c));
}

Polynomial chebyshev_t(int n) {
  if (n < 0) throw IndexOutOfRange("chebyshev_t needs a nonnegative index");
  if (n == 0) return Polynomial::constant(1);
  return (chebyshev_u(n) - chebyshev_u(n - 2)) / Rational(2);
}

Polynomial u_derivative_explicit(int n, int s) {
  check_derivative_index(n, s);
  std::vector<Rational> c(static_cast<std::size_t>(n - s) + 1);
  const Integer sf = factorial(s);
  for (int j = 0; 2 * j <= n - s; ++j) {
    Integer term = sf * binomial(n - j, j) * binomial(n - 2 * j, s) * pow2(n - 2 * j);
    c[static_cast<std::size_t>(n - 2 * j - s)] = (j % 2 == 0) ? Rational(term) : Rational(-term);
  }
  return Polynomial(std::move(c));
}

Polynomial u_derivative_ucomb(int n, int s, UcombPrefactor prefactor) {
  check_derivative_index(n, s, 1);
  Polynomial sum;
  for (int j = 0; 2 * j <= n - s; ++j) {
    Rational w(factorial(n - j) * factorial(j + s - 1), factorial(j) * factorial(n - j - s + 1));
    w.canonicalize();
    w *= n - s - 2 * j + 1;
    sum += chebyshev_u(n - s - 2 * j) * w;
  }
  const Integer denom = prefactor == UcombPrefactor::kClassical ? factorial(s - 1) : factorial(s);
  Rational scale(pow2(s), denom);
  scale.canonicalize();
  return sum * scale;
}

Polynomial symmetrized_coeffs(int n, int s) {
  check_derivative_index(n, s);
  std::vector<Rational> c(static_cast<std::size_t>(n - s) + 1);
  for (int j = 0; j <= n - s; ++j) c[static_cast<std::size_t>(j)] = binomial(n - j, s) * binomial(s + j, s);
  return Polynomial(std::move(c));
}

Polynomial f_ns(int n, int s) { return symmetrized_coeffs(n, s) / Rational(binomial(n, s)); }

Rational theta(int n, int s) {
  check_derivative_index(n, s);
  if ((n - s) % 2 != 0) return 0;
  const Integer b = binomial((n + s) / 2, (n - s) / 2);
  return Rational(-(pow2(s) * factorial(s) * b * b));
}

Polynomial half_angle_substitute(const Polynomial& p) {
  if (p.is_zero()) return p;
  const int d = p.degree();
  const Polynomial half_one_plus_z({Rational(1, 2), Rational(1, 2)});
  Polynomial out;
  for (int k = 0; 2 * k <= d; ++k) {
    const Rational c = p.coeff(static_cast<std::size_t>(d - 2 * k));
    if (sgn(c) == 0) continue;
    out += Polynomial::monomial(c, static_cast<std::size_t>(k)) * pow(half_one_plus_z, static_cast<unsigned>(d - 2 * k));
  }
  for (int i = d - 1; i >= 0; i -= 2)
    if (sgn(p.coeff(static_cast<std::size_t>(i))) != 0)
      throw std::invalid_argument("half_angle_substitute needs a polynomial of definite parity");
  return out;
}

namespace {

// Integer-scaled copy so that sign evaluation at dyadic points stays cheap.
struct ExactSign {
  Polynomial p;
  int operator()(double x) const { return p.sign_at(Rational(x)); }
};

// Bisects [lo, hi] (sign change guaranteed) on double midpoints with exact
// signs until the bracket is narrower than tol.
double bisect(const ExactSign& sign, double lo, double hi, int sign_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int sm = sign(mid);
    if (sm == 0) return mid;
    if (sm == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > tol)
    throw ToleranceNotReached("bracket cannot be narrowed below tol=" + std::to_string(tol) +
                              " in double precision");
  return lo + (hi - lo) / 2;
}

// Newton polish in floating point; only accepted when it stays in the bracket.
double polish(const Polynomial& p, const Polynomial& dp, double x, double lo, double hi) {
  for (int it = 0; it < 2; ++it) {
    const double d = dp.eval(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = x - p.eval(x) / d;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

// Sturm-based isolation on (0, 1) as a fallback when an interlacing bracket
// fails its exact sign check.
std::vector<std::pair<double, double>> isolate_on_unit_interval(const Polynomial& p) {
  std::vector<std::pair<double, double>> out;
  const auto count = [&](double a, double b) {
    return sturm_count(p, Rational(a), Rational(b)) - (p.sign_at(Rational(a)) == 0 ? 1 : 0);
  };
  std::vector<std::pair<double, double>> work{{0.0, 1.0}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int c = count(a, b);  // roots in (a, b]
    if (c == 0) continue;
    if (c == 1) {
      if (p.sign_at(Rational(b)) == 0) {
        out.emplace_back(b, b);
      } else {
        out.emplace_back(a, b);
      }
      continue;
    }
    const double m = a + (b - a) / 2;
    if (m <= a || m >= b) throw ToleranceNotReached("root isolation collapsed in double precision");
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PositiveZeroSet u_derivative_positive_zeros(int n, int s, double tol) {
  if (n < 0 || s < 0 || s >= n)
    throw IndexOutOfRange("positive zeros need 0 <= s < N (N=" + std::to_string(n) + ", s=" + std::to_string(s) + ")");
  if (!(tol > 0)) throw ToleranceNotReached("tolerance must be positive");

  const double pi = std::numbers::pi;
  // Level 0: U_n vanishes at cos(k pi / (n+1)); keep the nonnegative ones.
  std::vector<double> level;
  for (int k = n / 2; k >= 1; --k) level.push_back(std::cos(k * pi / (n + 1)));

  // Bracket each level-0 zero, then walk down the derivative orders: zeros of
  // U^(k) interlace those of U^(k-1), so consecutive nonnegative zeros of the
  // previous level bracket the positive zeros of the next one.
  auto refine_level = [&](int order, const std::vector<std::pair<double, double>>& brackets) {
    Polynomial p = primitive_part(u_derivative_explicit(n, order));
    Polynomial dp = derivative(p);
    ExactSign sign{p};
    std::vector<double> roots;
    bool ok = true;
    for (auto [lo, hi] : brackets) {
      const int sl = sign(lo), sh = sign(hi);
      if (sl == 0 || sh == 0 || sl == sh) {
        ok = false;
        break;
      }
      const double r = bisect(sign, lo, hi, sl, tol);
      roots.push_back(polish(p, dp, r, lo, hi));
    }
    if (!ok) {
      roots.clear();
      for (auto [lo, hi] : isolate_on_unit_interval(p)) {
        const int sl = sign(lo);
        const double r = sl == 0 ? lo : bisect(sign, lo, hi, sl, tol);
        roots.push_back(polish(p, dp, r, lo, hi));
      }
    }
    return roots;
  };

  const double pad = 1e-9;
  std::vector<std::pair<double, double>> brackets;
  for (double z : level) brackets.emplace_back(z - pad, std::min(z + pad, 1.0));
  std::vector<double> positive = refine_level(0, brackets);

  for (int order = 1; order <= s; ++order) {
    // Nonnegative zeros of the previous level; 0 is a zero when n-order+1 is odd.
    std::vector<double> nonneg;
    if ((n - order + 1) % 2 == 1) nonneg.push_back(0.0);
    nonneg.insert(nonneg.end(), positive.begin(), positive.end());
    brackets.clear();
    for (std::size_t i = 0; i + 1 < nonneg.size(); ++i) brackets.emplace_back(nonneg[i], nonneg[i + 1]);
    positive = refine_level(order, brackets);
  }

  PositiveZeroSet out;
  out.tol = tol;
  out.values = std::move(positive);
  std::sort(out.values.begin(), out.values.end());
  if (out.values.size() != static_cast<std::size_t>((n - s) / 2))
    throw ToleranceNotReached("found " + std::to_string(out.values.size()) + " positive zeros, expected " +
                              std::to_string((n - s) / 2));
  return out;
}

std::vector<double> f_ns_from_zeros(int n, int s, const PositiveZeroSet& zeros) {
  std::vector<double> acc{1.0};
  auto mul = [&acc](const std::vector<double>& f) {
    std::vector<double> out(acc.size() + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += acc[i] * f[j];
    acc = std::move(out);
  };
  if ((n - s) % 2 == 1) mul({1.0, 1.0});
  for (double nu : zeros.values) mul({1.0, 2.0 * (1.0 - 2.0 * nu * nu), 1.0});
  return acc;
}

}  // namespace unitcircle
