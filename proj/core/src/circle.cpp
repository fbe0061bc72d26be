#include "unitcircle/circle.hpp"

#include <string>

#include "unitcircle/errors.hpp"

namespace unitcircle {

GammaVector::GammaVector(int n, std::vector<Rational> gamma) : n_(n), gamma_(std::move(gamma)) {
  if (gamma_.empty()) throw BadGammaVector("gamma vector is empty");
  if (gamma_.front() != 1) throw BadGammaVector("gamma_0 must equal 1, got " + gamma_.front().get_str());
  if (n_ < 0 || s() > n_)
    throw BadGammaVector("need 0 <= s <= N, got N=" + std::to_string(n_) + ", s=" + std::to_string(s()));
  for (auto& g : gamma_) g.canonicalize();
}

GammaVector GammaVector::from_tail(int n, const std::vector<Rational>& tail) {
  std::vector<Rational> full;
  full.reserve(tail.size() + 1);
  full.emplace_back(1);
  full.insert(full.end(), tail.begin(), tail.end());
  return GammaVector(n, std::move(full));
}

Polynomial build_p(const GammaVector& g) {
  const int deg = g.degree();
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= g.s(); ++j) {
    const Rational signed_g = (j % 2 == 0) ? g[j] : Rational(-g[j]);
    c[static_cast<std::size_t>(j)] += signed_g;
    c[static_cast<std::size_t>(deg - j)] -= signed_g;
  }
  return Polynomial(std::move(c));
}

const char* to_string(ReciprocalClass kind) {
  switch (kind) {
    case ReciprocalClass::kSymmetric: return "symmetric";
    case ReciprocalClass::kAntisymmetric: return "antisymmetric";
    case ReciprocalClass::kNone: return "none";
  }
  return "none";
}

ReciprocalClass classify_reciprocal(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const auto& c = p.coeffs();
  const std::size_t n = c.size() - 1;
  bool palindromic = true;
  bool anti = true;
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i] != c[n - i]) palindromic = false;
    if (c[i] != -c[n - i]) anti = false;
  }
  if (palindromic) return ReciprocalClass::kSymmetric;
  if (anti) return ReciprocalClass::kAntisymmetric;
  return ReciprocalClass::kNone;
}

RealAxisReduction reduce_to_real_axis(const Polynomial& p) {
  if (classify_reciprocal(p) == ReciprocalClass::kNone) throw NotReciprocal();

  RealAxisReduction out;
  const Polynomial one_minus_z({Rational(1), Rational(-1)});
  const Polynomial one_plus_z({Rational(1), Rational(1)});
  Polynomial h = p;
  while (h.degree() >= 1 && h.sign_at(1) == 0) {
    h = divide_exact(h, one_minus_z);
    ++out.mult_plus1;
  }
  while (h.degree() >= 1 && h.sign_at(-1) == 0) {
    h = divide_exact(h, one_plus_z);
    ++out.mult_minus1;
  }
  // h(1) != 0 rules out anti-palindromic, h(-1) != 0 rules out odd degree:
  // h is palindromic of degree 2m.
  const int m = h.degree() / 2;

  // z^-m h(z) = h_m + sum_k h_{m+k} (z^k + z^-k) and z^k + z^-k = xi_k(z + 1/z)
  // with xi_0 = 2, xi_1 = x, xi_{k+1} = x xi_k - xi_{k-1}.
  const Polynomial x = z_pow(1);
  Polynomial xi_prev = Polynomial::constant(2);
  Polynomial xi = x;
  Polynomial q = Polynomial::constant(h.coeff(static_cast<std::size_t>(m)));
  for (int k = 1; k <= m; ++k) {
    q += xi * h.coeff(static_cast<std::size_t>(m + k));
    Polynomial next = x * xi - xi_prev;
    xi_prev = std::move(xi);
    xi = std::move(next);
  }
  out.q = std::move(q);
  return out;
}

Polynomial expand_real_axis_form(const RealAxisReduction& r) {
  const int m = r.q.degree();
  // z^m Q(z + 1/z) = sum_i q_i z^(m-i) (z^2 + 1)^i
  Polynomial sym;
  const Polynomial z2_plus_1({Rational(1), Rational(0), Rational(1)});
  for (int i = 0; i <= m; ++i) {
    const Rational c = r.q.coeff(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    sym += Polynomial::monomial(c, static_cast<std::size_t>(m - i)) * pow(z2_plus_1, static_cast<unsigned>(i));
  }
  return sym * pow(Polynomial({Rational(1), Rational(-1)}), static_cast<unsigned>(r.mult_plus1)) *
         pow(Polynomial({Rational(1), Rational(1)}), static_cast<unsigned>(r.mult_minus1));
}

CircleReport all_zeros_on_unit_circle(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  CircleReport report;
  report.degree = p.degree();
  report.kind = classify_reciprocal(p);
  if (report.degree == 0) {
    report.all_on_circle = true;
    return report;
  }

  // A zero w of p with |w| = 1 is also a zero of z^n p(1/z) of the same
  // multiplicity, since 1/w = conj(w) and p is real. The gcd therefore keeps
  // every unit-circle zero and is itself reciprocal.
  const Polynomial core = report.kind == ReciprocalClass::kNone ? gcd(p, reversed(p)) : p;
  if (core.degree() < 1) return report;

  RealAxisReduction red = reduce_to_real_axis(core);
  report.mult_at_plus1 = red.mult_plus1;
  report.mult_at_minus1 = red.mult_minus1;

  int interior = 0;
  if (red.q.degree() >= 1) {
    // x = +-2 corresponds to z = +-1 with doubled multiplicity. After the
    // linear factors are stripped Q(+-2) != 0, but book it explicitly anyway.
    const int at_plus2 = root_multiplicity(red.q, 2);
    const int at_minus2 = root_multiplicity(red.q, -2);
    report.mult_at_plus1 += 2 * at_plus2;
    report.mult_at_minus1 += 2 * at_minus2;
    interior = sturm_count(red.q, -2, 2, /*with_multiplicity=*/true) - at_plus2 - at_minus2;
  }
  report.zeros_on_circle_with_multiplicity = report.mult_at_plus1 + report.mult_at_minus1 + 2 * interior;
  report.all_on_circle = report.zeros_on_circle_with_multiplicity == report.degree;
  report.reduced_q = std::move(red.q);
  return report;
}

bool condition_a(int n, int s, const GammaVector& g) {
  if (g.n() != n || g.s() != s)
    throw BadGammaVector("gamma vector has (N, s) = (" + std::to_string(g.n()) + ", " + std::to_string(g.s()) +
                         "), expected (" + std::to_string(n) + ", " + std::to_string(s) + ")");
  // With M = N+s+1, P(e^{it}) = -2i e^{iMt/2} S(t), so the zeros of S on
  // [0, pi] are the zeros of P on the closed upper half circle, with equal
  // multiplicity. Off the real axis circle zeros pair with their conjugates.
  // Writing k_1, k_{-1} for the multiplicities at z = +-1 and c for the zeros
  // in the open upper half circle, P carries k_1 + k_{-1} + 2c circle zeros
  // and S has k_1 + k_{-1} + c zeros on [0, pi]. All M zeros lie on the
  // circle iff 2c = M - k_1 - k_{-1}, i.e. S has (M + k_1 + k_{-1}) / 2
  // zeros. When +-1 are simple (k_1 = 1, k_{-1} = 1 exactly for even M) that
  // is floor((M+2)/2) = floor((N+s+3)/2). Higher multiplicities at +-1 raise
  // the target, so the decision goes through the exact circle test, which
  // books them directly.
  return all_zeros_on_unit_circle(build_p(g)).all_on_circle;
}

bool l1_ball_sufficient(const GammaVector& g) {
  Rational sum = 0;
  for (int j = 1; j <= g.s(); ++j) sum += abs(g[j]);
  return sum <= 1;
}

}  // namespace unitcircle
