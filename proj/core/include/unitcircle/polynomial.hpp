#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "unitcircle/rational.hpp"

namespace unitcircle {

/// Dense univariate polynomial over Q. Coefficient i multiplies z^i.
///
/// The coefficient vector is kept canonical: no trailing zeros are stored,
/// so the zero polynomial is the empty vector and degree() is -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// Product of (z - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  /// Sign of p(x) computed exactly.
  int sign_at(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::vector<double> to_doubles() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct SquareFreeFactor {
  Polynomial factor;
  int multiplicity = 1;
};

/// Product of factor^multiplicity equals the input up to a rational constant;
/// factors are monic, square-free and pairwise coprime.
struct SquareFreeDecomposition {
  std::vector<SquareFreeFactor> factors;
};

/// z^k, for building polynomials by hand.
Polynomial z_pow(std::size_t k);
Polynomial pow(const Polynomial& p, unsigned k);

/// s-th formal derivative.
Polynomial derivative(const Polynomial& p, unsigned s = 1);

/// Euclidean division; throws DivisionByZero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);
/// p / q when q | p; throws DivisionByZero or NonzeroRemainder.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// Positive content c with p / c an integer polynomial of coprime coefficients.
Rational content(const Polynomial& p);
Polynomial primitive_part(const Polynomial& p);
Polynomial monic(const Polynomial& p);

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// z^deg(p) * p(1/z).
Polynomial reversed(const Polynomial& p);
/// p(c * z).
Polynomial scale_argument(const Polynomial& p, const Rational& c);
/// p(q(z)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

SquareFreeDecomposition squarefree_decompose(const Polynomial& p);

/// Multiplicity of the root x of p (0 when p(x) != 0). Throws ZeroPolynomial.
int root_multiplicity(const Polynomial& p, const Rational& x);

/// Sturm chain p, p', -rem(...), ... with each element made primitive.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of real roots in the closed interval [a, b]. Without multiplicity,
/// distinct roots are counted. Throws ZeroPolynomial or InvalidInterval.
int sturm_count(const Polynomial& p, const Rational& a, const Rational& b,
                bool with_multiplicity = false);

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

/// Human-readable form, e.g. "1 - 5/3*z + 5/3*z^4 - z^5".
std::string to_string(const Polynomial& p);
/// Coefficients as "p/q" strings, lowest power first.
std::vector<std::string> coefficient_strings(const Polynomial& p);

}  // namespace unitcircle
