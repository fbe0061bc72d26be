#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "unitcircle/family.hpp"
#include "unitcircle/polynomial.hpp"
#include "unitcircle/rational.hpp"

namespace testing_support {

using unitcircle::Polynomial;
using unitcircle::Rational;

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return unitcircle::ratio(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Polynomial(std::move(c));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, int max_degree) {
  Polynomial p;
  while (p.is_zero()) p = random_polynomial(rng, max_degree);
  return p;
}

// A polynomial of degree <= 8 built from distinct rational roots k/4 in [-5, 5]
// and quadratics without real roots, so its real roots are simple and at least
// 1/4 apart.
struct RootedInstance {
  Polynomial p;
  std::vector<Rational> roots;
};

inline RootedInstance random_rooted_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 8), quarter(-20, 20), small(-3, 3), lift(1, 6);
  const int target = deg(rng);
  std::uniform_int_distribution<int> nquad(0, target / 2);
  const int quads = nquad(rng);
  RootedInstance out;
  out.p = Polynomial::constant(random_rational(rng, 5, 3) + 7);
  std::set<Rational> used;
  for (int i = 0; i < target - 2 * quads; ++i) {
    Rational r;
    do r = unitcircle::ratio(quarter(rng), 4);
    while (used.count(r));
    used.insert(r);
    out.roots.push_back(r);
    out.p *= Polynomial{-r, 1};
  }
  for (int i = 0; i < quads; ++i) {
    // z^2 + b z + c with c > b^2 / 4
    const Rational b = unitcircle::ratio(small(rng), 2);
    const Rational c = b * b / 4 + unitcircle::ratio(lift(rng), 5);
    out.p *= Polynomial{c, b, 1};
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// Counts sign changes of p on a grid of step 1/8 shifted by 1/257, so no grid
// point is a multiple of 1/4; then bisects each bracket down to width 1/2^20 and
// returns the bracket midpoints. Independent of any Sturm machinery.
inline std::vector<Rational> bisection_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  const Rational step = unitcircle::ratio(1, 8), shift = unitcircle::ratio(1, 257);
  Rational a = lo + shift;
  int sa = p.sign_at(a);
  while (a < hi) {
    Rational b = a + step;
    if (b > hi) b = hi;
    const int sb = p.sign_at(b);
    if (sa != 0 && sb != 0 && sa != sb) {
      Rational x = a, y = b;
      int sx = sa;
      while (y - x > Rational(1, 1u << 20)) {
        Rational m = (x + y) / 2;
        const int sm = p.sign_at(m);
        if (sm == 0) {
          x = y = m;
          break;
        }
        if (sm == sx) x = m; else y = m;
      }
      out.push_back((x + y) / 2);
    }
    a = b;
    sa = sb;
  }
  return out;
}

}  // namespace testing_support
