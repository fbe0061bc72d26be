#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "unitcircle/errors.hpp"
#include "unitcircle/polynomial.hpp"

namespace uc = unitcircle;
using uc::Polynomial;
using uc::Rational;
using uc::ratio;

namespace {

const Polynomial kZ{0, 1};

Polynomial one_minus_z() { return Polynomial{1, -1}; }
Polynomial one_plus_z() { return Polynomial{1, 1}; }

// Factors as (monic factor, multiplicity), sorted by multiplicity then degree.
std::vector<std::pair<Polynomial, int>> sorted_factors(const uc::SquareFreeDecomposition& d) {
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& f : d.factors) out.emplace_back(f.factor, f.multiplicity);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first.degree() < b.first.degree();
  });
  return out;
}

}  // namespace

TEST(Rational, ParseIsExact) {
  EXPECT_EQ(uc::parse_rational("5/3"), ratio(5, 3));
  EXPECT_EQ(uc::parse_rational("-10/4"), ratio(-5, 2));
  EXPECT_EQ(uc::parse_rational("1.7"), ratio(17, 10));
  EXPECT_EQ(uc::parse_rational("-0.02"), ratio(-1, 50));
  EXPECT_EQ(uc::parse_rational("7"), Rational(7));
  EXPECT_THROW(uc::parse_rational("1/0"), uc::Error);
  EXPECT_THROW(uc::parse_rational("abc"), uc::ParseError);
  EXPECT_THROW(uc::parse_rational(""), uc::ParseError);
}

TEST(Rational, RatioCanonicalizes) {
  const Rational r = ratio(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(uc::to_string(r), "-3/2");
  EXPECT_EQ(uc::to_string(ratio(4, 2)), "2");
  EXPECT_THROW(ratio(1, 0), uc::DivisionByZero);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(uc::binomial(14, 2), 91);
  EXPECT_EQ(uc::binomial(5, 6), 0);
  EXPECT_EQ(uc::binomial(5, -1), 0);
  EXPECT_EQ(uc::factorial(6), 720);
  EXPECT_EQ(uc::pow2(10), 1024);
}

TEST(Rational, FromDoubleIsExactBinaryValue) {
  EXPECT_EQ(uc::from_double(0.5), ratio(1, 2));
  EXPECT_NE(uc::from_double(0.1), ratio(1, 10));
  EXPECT_EQ(uc::to_double(uc::from_double(0.1)), 0.1);
}

TEST(Polynomial, CanonicalForm) {
  EXPECT_TRUE(Polynomial({0, 0, 0}).is_zero());
  EXPECT_EQ(Polynomial({0, 0, 0}).degree(), -1);
  EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1);
}

TEST(Polynomial, Multiply) {
  EXPECT_EQ(one_minus_z() * one_plus_z(), Polynomial({1, 0, -1}));
  const Polynomial p = uc::pow(one_minus_z(), 3) * Polynomial{1, ratio(4, 3), 1};
  EXPECT_EQ(p, Polynomial({1, ratio(-5, 3), 0, 0, ratio(5, 3), -1}));
  EXPECT_TRUE((p * Polynomial{}).is_zero());
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(uc::derivative(Polynomial{-1, 0, 4}), Polynomial({0, 8}));
  EXPECT_EQ(uc::derivative(uc::z_pow(3), 2), Polynomial({0, 6}));
  const Polynomial p{1, 2, 3, 4};
  EXPECT_TRUE(uc::derivative(p, 4).is_zero());
}

TEST(Polynomial, DivideExact) {
  EXPECT_EQ(uc::divide_exact(Polynomial{1, 0, 0, 0, 0, -1}, one_minus_z()), Polynomial({1, 1, 1, 1, 1}));
  EXPECT_EQ(uc::divide_exact(Polynomial{1, 0, -1}, one_plus_z()), one_minus_z());
  EXPECT_THROW(uc::divide_exact(Polynomial{1, 0, 1}, one_plus_z()), uc::NonzeroRemainder);
  EXPECT_THROW(uc::divide_exact(Polynomial{1, 0, 1}, Polynomial{}), uc::DivisionByZero);
}

TEST(Polynomial, SquareFree) {
  // Factors come back monic: 1 - z appears as z - 1.
  const Polynomial zm1{-1, 1}, zp1{1, 1};
  auto f = sorted_factors(uc::squarefree_decompose(uc::pow(one_minus_z(), 3) * one_plus_z()));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], std::make_pair(zp1, 1));
  EXPECT_EQ(f[1], std::make_pair(zm1, 3));

  f = sorted_factors(uc::squarefree_decompose(uc::pow(one_minus_z(), 2) * Polynomial{1, 0, -1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], std::make_pair(zp1, 1));
  EXPECT_EQ(f[1], std::make_pair(zm1, 3));

  const Polynomial sq{-1, 1, 1};
  f = sorted_factors(uc::squarefree_decompose(sq));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], std::make_pair(sq, 1));

  EXPECT_THROW(uc::squarefree_decompose(Polynomial{}), uc::ZeroPolynomial);
}

TEST(Polynomial, SturmCount) {
  EXPECT_EQ(uc::sturm_count(Polynomial{0, -4, 0, 8}, -2, 2), 3);
  EXPECT_EQ(uc::sturm_count(Polynomial{-1, 1, 1}, -2, 2), 2);
  EXPECT_EQ(uc::sturm_count(uc::pow(one_minus_z(), 2), 0, 2, true), 2);
  EXPECT_EQ(uc::sturm_count(uc::pow(one_minus_z(), 2), 0, 2, false), 1);
  // Roots on the endpoints are included.
  EXPECT_EQ(uc::sturm_count(Polynomial{0, -4, 0, 8}, 0, ratio(1, 2)), 1);
  EXPECT_EQ(uc::sturm_count(Polynomial{-1, 0, 1}, -1, 1), 2);
  EXPECT_THROW(uc::sturm_count(Polynomial{}, 0, 1), uc::ZeroPolynomial);
  EXPECT_THROW(uc::sturm_count(Polynomial{1, 1}, 1, 0), uc::InvalidInterval);
}

TEST(Polynomial, GcdAndRootMultiplicity) {
  const Polynomial a = uc::pow(one_minus_z(), 2) * Polynomial{2, 0, 1};
  const Polynomial b = one_minus_z() * one_plus_z();
  EXPECT_EQ(uc::gcd(a, b), Polynomial({-1, 1}));
  EXPECT_EQ(uc::root_multiplicity(a, 1), 2);
  EXPECT_EQ(uc::root_multiplicity(a, -1), 0);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(uc::to_string(Polynomial{1, ratio(-5, 3), 0, 0, ratio(5, 3), -1}), "1 - 5/3*z + 5/3*z^4 - z^5");
  EXPECT_EQ(uc::coefficient_strings(Polynomial{1, ratio(-5, 3)}), (std::vector<std::string>{"1", "-5/3"}));
}

TEST(PolynomialProperty, RingAxioms) {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing_support::random_polynomial(rng, 6);
    const auto b = testing_support::random_polynomial(rng, 6);
    const auto c = testing_support::random_polynomial(rng, 6);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolynomialProperty, DivideUndoesMultiply) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing_support::random_polynomial(rng, 12);
    const auto b = testing_support::random_nonzero_polynomial(rng, 12);
    EXPECT_EQ(uc::divide_exact(a * b, b), a);
  }
}

TEST(PolynomialProperty, SturmMultiplicityMatchesDecomposition) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = testing_support::random_nonzero_polynomial(rng, 3);
    p *= uc::pow(testing_support::random_nonzero_polynomial(rng, 2), 2);
    if (p.degree() < 1) continue;
    const Rational a = testing_support::random_rational(rng), b = a + 1 + testing_support::random_rational(rng, 4, 1) * testing_support::random_rational(rng, 4, 1);
    if (b <= a) continue;
    int sum = 0;
    for (const auto& f : uc::squarefree_decompose(p).factors) sum += f.multiplicity * uc::sturm_count(f.factor, a, b);
    EXPECT_EQ(uc::sturm_count(p, a, b, true), sum);
  }
}

TEST(PolynomialProperty, SturmAgreesWithBisection) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto inst = testing_support::random_rooted_instance(rng);
    const Rational bound = uc::cauchy_bound(inst.p);
    const auto found = testing_support::bisection_roots(inst.p, -bound, bound);
    ASSERT_EQ(found.size(), inst.roots.size());
    EXPECT_EQ(uc::sturm_count(inst.p, -bound, bound), static_cast<int>(found.size()));
    for (std::size_t k = 0; k < found.size(); ++k) EXPECT_LT(uc::abs(found[k] - inst.roots[k]), ratio(1, 1000));
    // A subinterval with rational endpoints away from the roots.
    std::uniform_int_distribution<int> width(1, 6);
    const Rational a = testing_support::random_rational(rng, 20, 4) + ratio(1, 8), b = a + width(rng);
    const auto sub = testing_support::bisection_roots(inst.p, a, b);
    EXPECT_EQ(uc::sturm_count(inst.p, a, b), static_cast<int>(sub.size()));
  }
}
