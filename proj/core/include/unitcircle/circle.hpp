#pragma once

#include "unitcircle/family.hpp"
#include "unitcircle/polynomial.hpp"

namespace unitcircle {

enum class ReciprocalClass { kSymmetric, kAntisymmetric, kNone };

const char* to_string(ReciprocalClass kind);

/// Palindromic / anti-palindromic / neither, by exact comparison.
/// Throws ZeroPolynomial.
ReciprocalClass classify_reciprocal(const Polynomial& p);

/// A reciprocal polynomial written as
///   (1 - z)^mult_plus1 (1 + z)^mult_minus1 z^m Q(z + 1/z)   (up to a constant),
/// with deg Q = m.
struct RealAxisReduction {
  Polynomial q;
  int mult_plus1 = 0;
  int mult_minus1 = 0;
};

/// Throws NotReciprocal.
RealAxisReduction reduce_to_real_axis(const Polynomial& p);

/// Inverse of the reduction: (1-z)^a (1+z)^b z^m Q(z + 1/z) as a polynomial.
Polynomial expand_real_axis_form(const RealAxisReduction& r);

struct CircleReport {
  bool all_on_circle = false;
  int degree = 0;
  int zeros_on_circle_with_multiplicity = 0;
  int mult_at_plus1 = 0;
  int mult_at_minus1 = 0;
  ReciprocalClass kind = ReciprocalClass::kNone;
  Polynomial reduced_q;
};

/// Exact decision whether every zero of p lies on |z| = 1.
/// Throws ZeroPolynomial.
CircleReport all_zeros_on_unit_circle(const Polynomial& p);

/// Whether S(t) has floor((N+s+3)/2) zeros on [0, pi] counted with
/// multiplicity. Throws BadGammaVector when (n, s) disagree with g.
bool condition_a(int n, int s, const GammaVector& g);

/// sum_{j>=1} |gamma_j| <= 1, which is sufficient for all zeros on the circle.
bool l1_ball_sufficient(const GammaVector& g);

}  // namespace unitcircle
