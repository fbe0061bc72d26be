#pragma once

#include <vector>

#include "unitcircle/polynomial.hpp"
#include "unitcircle/rational.hpp"

namespace unitcircle {

/// Coefficients (gamma_0 = 1, gamma_1, ..., gamma_s) of the antisymmetric
/// reciprocal family
///   P(z) = sum_{j=0}^{s} (-1)^j gamma_j (z^j - z^(N+s+1-j)),  0 <= s <= N.
class GammaVector {
 public:
  /// Full vector including gamma_0. Throws BadGammaVector unless gamma_0 == 1
  /// and 0 <= s <= N.
  GammaVector(int n, std::vector<Rational> gamma);
  /// gamma_1..gamma_s only; gamma_0 = 1 is prepended.
  static GammaVector from_tail(int n, const std::vector<Rational>& tail);

  int n() const noexcept { return n_; }
  int s() const noexcept { return static_cast<int>(gamma_.size()) - 1; }
  int degree() const noexcept { return n_ + s() + 1; }
  const std::vector<Rational>& values() const noexcept { return gamma_; }
  const Rational& operator[](std::size_t j) const { return gamma_.at(j); }

  friend bool operator==(const GammaVector&, const GammaVector&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> gamma_;
};

/// The family member for g; anti-palindromic of degree N+s+1.
Polynomial build_p(const GammaVector& g);

}  // namespace unitcircle
