#include "unitcircle/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>

#include "unitcircle/chebyshev.hpp"
#include "unitcircle/circle.hpp"
#include "unitcircle/errors.hpp"
#include "unitcircle/extremal.hpp"
#include "unitcircle/family.hpp"
#include "unitcircle/numeric_roots.hpp"
#include "unitcircle/polynomial.hpp"

namespace unitcircle {

namespace {

std::string ns_range(int n, int s) { return "N=" + std::to_string(n) + ",s=" + std::to_string(s); }
std::string n_range(int n) { return "N=" + std::to_string(n); }

Rational max_abs_diff(const Polynomial& a, const Polynomial& b) {
  const Polynomial d = a - b;
  Rational worst = 0;
  for (const auto& c : d.coeffs()) worst = std::max(worst, abs(c));
  return worst;
}

ReportEntry exact_entry(std::string identity, std::string range, const Polynomial& lhs, const Polynomial& rhs,
                        std::string notes = {}) {
  ReportEntry e{std::move(identity), std::move(range), false, false, 0.0, std::move(notes)};
  const Rational r = max_abs_diff(lhs, rhs);
  e.passed = (r == 0);
  e.exact_zero = e.passed;
  e.max_residual = r.get_d();
  return e;
}

ReportEntry numeric_entry(std::string identity, std::string range, double residual, double tol,
                          std::string notes = {}) {
  ReportEntry e{std::move(identity), std::move(range), residual < tol, false, residual, std::move(notes)};
  return e;
}

Polynomial U(int k) { return chebyshev_u(k); }
Polynomial T(int k) { return chebyshev_t(std::abs(k)); }

Rational fact(long k) { return Rational(factorial(k)); }
Rational binom(long n, long k) { return Rational(binomial(n, k)); }

Polynomial one_minus_z_pow(int k) { return pow(Polynomial{Rational(1), Rational(-1)}, static_cast<unsigned>(k)); }
Polynomial one_minus_z2_pow(int k) {
  return pow(Polynomial{Rational(1), Rational(0), Rational(-1)}, static_cast<unsigned>(k));
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.passed; });
}

ReportEntry verify_derivative_agreement(int n, int s) {
  check_derivative_index(n, s);
  const Polynomial formal = derivative(U(n), static_cast<unsigned>(s));
  const Polynomial explicit_form = u_derivative_explicit(n, s);
  ReportEntry e = exact_entry("derivative_agreement", ns_range(n, s), formal, explicit_form);
  if (s == 0) return e;  // the U-combination starts at s = 1
  const Polynomial classical = u_derivative_ucomb(n, s, UcombPrefactor::kClassical);
  const Rational r = max_abs_diff(formal, classical);
  if (r == 0) return e;

  // The (s-1)! prefactor failed: report it and judge the s! variant.
  const bool variant_ok = max_abs_diff(formal, u_derivative_ucomb(n, s, UcombPrefactor::kFactorialS)) == 0;
  e.exact_zero = false;
  e.max_residual = std::max(e.max_residual, r.get_d());
  e.passed = e.passed && variant_ok;
  e.notes = std::string("U-combination with prefactor 2^s/(s-1)! differs from formal differentiation; ") +
            (variant_ok ? "the 2^s/s! variant matches" : "the 2^s/s! variant differs too");
  return e;
}

ReportEntry verify_half_angle_sum(int n, int s) {
  check_derivative_index(n, s);
  const Polynomial lhs = half_angle_substitute(derivative(U(n), static_cast<unsigned>(s)));
  const Polynomial rhs = symmetrized_coeffs(n, s) * Rational(pow2(s) * factorial(s));
  return exact_entry("half_angle_coefficients", ns_range(n, s), lhs, rhs);
}

std::vector<ReportEntry> verify_expansions(int n, int s) {
  check_derivative_index(n, s);
  const Polynomial d = derivative(U(n), static_cast<unsigned>(s));
  const Rational k(pow2(s) * factorial(s));
  auto c = [&](int j) -> Rational { return binom(n - j, s) * binom(s + j, s); };

  Polynomial t_sum, companion, u_sum, u_shifted, telescoped;
  for (int j = 0; j <= n - s; ++j) {
    t_sum += c(j) * T(n - s - 2 * j);
    companion += c(j) * U(n - s - 2 * j - 1);
    u_sum += c(j) * U(n - s - 2 * j);
    u_shifted += c(j) * U(n - s - 2 * j - 2);
  }
  for (int j = 0; j <= (n - s) / 2; ++j) telescoped += c(j) * (U(n - s - 2 * j) - U(n - s - 2 * j - 2));
  telescoped = Polynomial::constant(theta(n, s)) + k * telescoped;

  const std::string r = ns_range(n, s);
  return {exact_entry("t_kind_expansion", r, k * t_sum, d),
          exact_entry("companion_sum_vanishes", r, companion, Polynomial()),
          exact_entry("u_expansion", r, k * u_sum, d),
          exact_entry("u_expansion_shifted", r, -k * u_shifted, d),
          exact_entry("theta_telescoped_form", r, telescoped, d)};
}

ReportEntry verify_low_order_sums(int n) {
  if (n < 1) throw IndexOutOfRange("low-order sum check needs N >= 1");
  Polynomial geometric;
  for (int j = 0; j <= n; ++j) geometric += z_pow(static_cast<std::size_t>(j));
  Polynomial weights;
  for (int j = 0; j <= n - 1; ++j) weights += Polynomial::monomial(Rational((j + 1) * (n - j)), static_cast<std::size_t>(j));

  const Polynomial u = U(n);
  Rational r = max_abs_diff(half_angle_substitute(u), geometric);
  r = std::max(r, max_abs_diff(half_angle_substitute(derivative(u)), 2 * weights));
  r = std::max(r, max_abs_diff(symmetrized_coeffs(n, 0), geometric));
  r = std::max(r, max_abs_diff(symmetrized_coeffs(n, 1), weights));
  ReportEntry e{"low_order_sums", n_range(n), r == 0, r == 0, r.get_d(), {}};
  return e;
}

std::vector<ReportEntry> verify_fns_closed_form(int n, int s) {
  check_derivative_index(n, s);
  const std::string range = ns_range(n, s);
  const int m = n + s + 1;
  const Polynomial lead = one_minus_z_pow(2 * s + 1);

  std::vector<ReportEntry> out;
  out.push_back(exact_entry("fns_closed_form", range, lead * f_ns(n, s), extremal_closed_form(n, s)));

  // Factorial form: integer weights A_{N,s,j} = (N-j)!(j+s)!/(j!(N-j-s)!).
  Polynomial weights;
  for (int j = 0; j <= n - s; ++j)
    weights += Polynomial::monomial(fact(n - j) * fact(j + s) / (fact(j) * fact(n - j - s)), static_cast<std::size_t>(j));
  const Polynomial lhs = lead * weights;
  Polynomial rhs;
  for (int j = 0; j <= s; ++j) {
    const Rational w = Rational(j % 2 == 0 ? 1 : -1) * fact(n - j) / (fact(j) * fact(s - j) * fact(m - j));
    rhs += w * (z_pow(static_cast<std::size_t>(j)) - z_pow(static_cast<std::size_t>(m - j)));
  }
  rhs *= fact(s) * fact(s) * fact(m) / fact(n - s);
  out.push_back(exact_entry("fns_factorial_form", range, lhs, rhs));

  // Coefficients A_p of the left side: the convolution sum everywhere, the
  // closed form for p <= s, and zero strictly between s and N+1.
  Rational worst = 0;
  for (int p = 0; p <= m; ++p) {
    Rational conv = 0;
    for (int j = 0; j <= n - s; ++j) {
      if (p - j < 0 || 2 * s + 1 + j - p < 0) continue;
      Rational term = fact(n - j) * fact(j + s) * fact(2 * s + 1) /
                      (fact(j) * fact(n - j - s) * fact(p - j) * fact(2 * s + 1 + j - p));
      conv += ((p - j) % 2 == 0) ? term : Rational(-term);
    }
    const Rational a = lhs.coeff(static_cast<std::size_t>(p));
    worst = std::max(worst, Rational(abs(conv - a)));
    if (p <= s) {
      Rational closed = fact(s) * fact(s) * fact(m) * fact(n - p) / (fact(p) * fact(n - s) * fact(s - p) * fact(m - p));
      if (p % 2 == 1) closed = -closed;
      worst = std::max(worst, Rational(abs(closed - a)));
    } else if (p < n + 1) {
      worst = std::max(worst, abs(a));
    }
  }
  out.push_back({"fns_coefficients", range, worst == 0, worst == 0, worst.get_d(), {}});

  Rational bworst = 0;
  for (int j = 0; j <= s; ++j) {
    const Rational left = binom(s, j) / binom(n, j);
    const Rational right = binom(n - j, n - s) / binom(n, s);
    bworst = std::max(bworst, Rational(abs(left - right)));
  }
  out.push_back({"binomial_ratio_identity", range, bworst == 0, bworst == 0, bworst.get_d(), {}});
  return out;
}

ReportEntry verify_extremal_exact(int n, int s) {
  check_derivative_index(n, s);
  return exact_entry("extremal_exact", ns_range(n, s), build_p(extremal_gamma(n, s)),
                     one_minus_z_pow(2 * s + 1) * f_ns(n, s));
}

ReportEntry verify_extremal_numeric(int n, int s, double tol) {
  check_derivative_index(n, s);
  if (s >= n) throw IndexOutOfRange("numeric factorization needs s < N");
  const ExtremalFactorization f = extremal_factorization(n, s, std::numeric_limits<double>::infinity());
  return numeric_entry("extremal_factorization", ns_range(n, s), f.max_deviation, tol);
}

ReportEntry verify_weighted_u_expansion(int n, int s) {
  check_derivative_index(n, s);
  const Polynomial d = derivative(U(n), static_cast<unsigned>(s));
  const Polynomial weighted = one_minus_z2_pow(s) * d;
  const Rational sign(s % 2 == 0 ? 1 : -1);

  Polynomial binomial_sum, factorial_sum;
  for (int j = 0; j <= s; ++j) {
    const Rational sj(j % 2 == 0 ? 1 : -1);
    binomial_sum += sj * binom(n - j, n - s) * binom(n + s + 1, j) * U(n + s - 2 * j);
    factorial_sum += sj * fact(n - j) / (fact(j) * fact(s - j) * fact(n + s + 1 - j)) * U(n + s - 2 * j);
  }
  const Rational k = Rational(pow2(s)) / Rational(factorial(s));
  Rational r = max_abs_diff(k * weighted, sign * binomial_sum);
  const Rational prefactor = sign * fact(s) * fact(n + s + 1) / (Rational(pow2(s)) * fact(n - s));
  r = std::max(r, max_abs_diff(weighted, prefactor * factorial_sum));
  return {"weighted_u_expansion", ns_range(n, s), r == 0, r == 0, r.get_d(), {}};
}

std::vector<ReportEntry> verify_special_orders(int n) {
  if (n < 4) throw IndexOutOfRange("closed-form cases need N >= 4");
  const std::string range = n_range(n);
  const Rational N(n);
  std::vector<ReportEntry> out;

  out.push_back(exact_entry("special_order_s1", range, one_minus_z2_pow(1) * derivative(U(n), 1),
                            Rational(1, 2) * ((N + 2) * U(n - 1) - N * U(n + 1))));
  out.push_back(exact_entry(
      "special_order_s2", range, one_minus_z2_pow(2) * derivative(U(n), 2),
      Rational(1, 4) * ((N + 3) * (N + 2) * U(n - 2) - 2 * (N + 3) * (N - 1) * U(n) + N * (N - 1) * U(n + 2))));
  out.push_back(exact_entry("special_order_s3", range, one_minus_z2_pow(3) * derivative(U(n), 3),
                            Rational(1, 8) * ((N + 2) * (N + 3) * (N + 4) * U(n - 3) -
                                              3 * (N - 2) * (N + 3) * (N + 4) * U(n - 1) +
                                              3 * (N - 2) * (N - 1) * (N + 4) * U(n + 1) -
                                              (N - 2) * (N - 1) * N * U(n + 3))));

  Polynomial lhs;
  for (int j = 1; j <= n; ++j)
    lhs += Rational(j % 2 == 0 ? 1 : -1) * Rational(j * (j - 1)) * binom(2 * n - 1, n - j) * U(2 * j - 2);
  out.push_back(exact_entry("special_order_s_N-2", range, lhs,
                            Rational((n - 1) * pow2(2 * n - 3)) *
                                Polynomial{Rational(-1), Rational(0), Rational(2 * n)} * one_minus_z2_pow(n - 2)));

  lhs = Polynomial();
  for (int j = 1; j <= n; ++j) lhs += Rational(j % 2 == 1 ? 1 : -1) * Rational(j) * binom(2 * n, n - j) * U(2 * j - 1);
  out.push_back(exact_entry("special_order_s_N-1", range, lhs,
                            Rational(n * pow2(2 * n - 1)) * z_pow(1) * one_minus_z2_pow(n - 1)));

  lhs = Polynomial();
  for (int j = 0; j <= n; ++j) lhs += Rational(j % 2 == 0 ? 1 : -1) * binom(2 * n + 1, n - j) * U(2 * j);
  out.push_back(exact_entry("special_order_s_N", range, lhs, Rational(pow2(2 * n)) * one_minus_z2_pow(n)));
  return out;
}

ReportEntry verify_vanishing_combinations(int n) {
  if (n < 0) throw IndexOutOfRange("vanishing combination check needs N >= 0");
  const Polynomial z = z_pow(1);

  Polynomial odd, even;
  for (int j = 0; j <= n; ++j) {
    const Rational sj(j % 2 == 0 ? 1 : -1);
    odd += sj * Rational(j + 1) * binom(2 * n + 2, n - j) * U(2 * j + 1);
    even += sj * binom(2 * n + 1, n - j) * U(2 * j);
  }
  const auto [quotient, remainder] = divmod(odd, z);
  Rational r = max_abs_diff(quotient, Rational(2 * n + 2) * even);
  r = std::max(r, max_abs_diff(remainder, Polynomial()));

  Polynomial second, third;
  for (int j = 0; j <= n; ++j) {
    const Rational w = Rational(j % 2 == 0 ? 1 : -1) / (fact(n - j) * fact(n + 2 + j));
    second += w * (Rational(j + 1) * U(2 * j + 1) - Rational(n + 2 + j) * z * U(2 * j));
    third += w * (Rational(j + 1) * U(2 * j - 1) + Rational(n - j) * z * U(2 * j));
  }
  r = std::max(r, max_abs_diff(second, Polynomial()));
  r = std::max(r, max_abs_diff(third, Polynomial()));
  return {"vanishing_combinations", n_range(n), r == 0, r == 0, r.get_d(), {}};
}

ReportEntry verify_zero_factorization(int n, int s, double tol) {
  check_derivative_index(n, s);
  if (s >= n) throw IndexOutOfRange("zero factorization needs s < N");
  const PositiveZeroSet zeros = u_derivative_positive_zeros(n, s);
  std::vector<double> approx = f_ns_from_zeros(n, s, zeros);
  const double prefactor = Rational(fact(n) * Rational(pow2(s)) / fact(n - s)).get_d();
  for (double& c : approx) c *= prefactor;
  const Polynomial exact = symmetrized_coeffs(n, s) * Rational(pow2(s) * factorial(s));
  const double r = scaled_max_deviation(approx, exact);
  if (!(r < tol))
    throw ToleranceNotReached("zero factorization for " + ns_range(n, s) + " deviates by " + fmt(r));
  return numeric_entry("zero_factorization", ns_range(n, s), r, tol);
}

std::vector<ReportEntry> verify_quadrinomial_crosscheck(int n, double tol) {
  if (n < 4) throw IndexOutOfRange("quadrinomial check needs N >= 4");
  const std::string range = n_range(n);
  const Rational edge = ratio(n, n - 2);
  const Rational lo = -edge;
  const Rational hi = (n % 2 == 1) ? Rational(1) : edge;

  auto q = [n](const Rational& kappa) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[0] = 1;
    c[1] += kappa;
    c[static_cast<std::size_t>(n - 1)] -= kappa;
    c[static_cast<std::size_t>(n)] -= 1;
    return Polynomial(std::move(c));
  };

  std::vector<Rational> probes{lo, hi, lo - Rational(1, 1000), lo + Rational(1, 1000), hi - Rational(1, 1000),
                               hi + Rational(1, 1000)};
  for (int k = -50; k <= 50; ++k) probes.push_back(ratio(k, 20));
  long mismatches = 0;
  std::string first_bad;
  for (const auto& kappa : probes) {
    const bool expected = (kappa >= lo && kappa <= hi);
    if (all_zeros_on_unit_circle(q(kappa)).all_on_circle != expected) {
      if (mismatches++ == 0) first_bad = "first mismatch at kappa=" + to_string(kappa);
    }
  }
  std::vector<ReportEntry> out;
  out.push_back({"quadrinomial_interval", range, mismatches == 0, mismatches == 0, static_cast<double>(mismatches),
                 first_bad});

  auto quad_product = [](std::vector<double> acc, const std::vector<double>& cs, double sign) {
    for (double g : cs) acc = mul(acc, {1.0, sign * 2.0 * g, 1.0});
    return acc;
  };
  auto linear = [](int minus, int plus) {
    std::vector<double> acc{1.0};
    for (int i = 0; i < minus; ++i) acc = mul(acc, {1.0, -1.0});
    for (int i = 0; i < plus; ++i) acc = mul(acc, {1.0, 1.0});
    return acc;
  };
  std::vector<double> gamma;
  for (double nu : u_derivative_positive_zeros(n - 2, 1).values) gamma.push_back(1.0 - 2.0 * nu * nu);

  if (n % 2 == 1) {
    const double r1 = scaled_max_deviation(quad_product(linear(3, 0), gamma, 1.0), q(lo));
    out.push_back(numeric_entry("quadrinomial_left_odd", range, r1, tol));
    std::vector<double> beta;
    for (double mu : u_derivative_positive_zeros(n - 2, 0).values) beta.push_back(1.0 - 2.0 * mu * mu);
    const double r4 = scaled_max_deviation(quad_product(linear(1, 2), beta, 1.0), q(Rational(1)));
    out.push_back(numeric_entry("quadrinomial_right_odd", range, r4, tol));
  } else {
    const double r2 = scaled_max_deviation(quad_product(linear(3, 1), gamma, 1.0), q(lo));
    out.push_back(numeric_entry("quadrinomial_left_even", range, r2, tol));
    // The factor 1 + z^2 + 2z gamma_j cannot hold here: z -> -z maps the
    // kappa = -N/(N-2) case onto this one and flips the middle sign.
    const double plus_sign = scaled_max_deviation(quad_product(linear(1, 3), gamma, 1.0), q(hi));
    const double r3 = scaled_max_deviation(quad_product(linear(1, 3), gamma, -1.0), q(hi));
    std::string notes;
    if (!(plus_sign < tol))
      notes = "factor 1+z^2+2z*gamma_j gives residual " + fmt(plus_sign) + "; 1+z^2-2z*gamma_j used";
    out.push_back(numeric_entry("quadrinomial_right_even", range, r3, tol, notes));
  }
  return out;
}

ReportEntry verify_cohn_numeric(int n, int s, double tol) {
  check_derivative_index(n, s);
  const Polynomial p = build_p(extremal_gamma(n, s));
  Polynomial dp = derivative(p);
  const int k1 = root_multiplicity(p, Rational(1));
  const int km1 = root_multiplicity(p, Rational(-1));
  if (k1 > 1) dp = divide_exact(dp, pow(Polynomial{Rational(-1), Rational(1)}, static_cast<unsigned>(k1 - 1)));
  if (km1 > 1) dp = divide_exact(dp, pow(Polynomial{Rational(1), Rational(1)}, static_cast<unsigned>(km1 - 1)));
  double worst = 0.0;
  for (const auto& root : polynomial_roots(dp.to_doubles())) worst = std::max(worst, std::abs(root) - 1.0);
  return numeric_entry("cohn_derivative_disc", ns_range(n, s), std::max(0.0, worst), tol);
}

namespace {

class Aggregator {
 public:
  void add(const ReportEntry& e, const std::string& range) {
    auto it = std::find_if(out_.begin(), out_.end(), [&](const ReportEntry& x) { return x.identity == e.identity; });
    if (it == out_.end()) {
      out_.push_back({e.identity, range, true, true, 0.0, {}});
      it = std::prev(out_.end());
      notes_.emplace_back();
    }
    auto& notes = notes_[static_cast<std::size_t>(it - out_.begin())];
    it->passed = it->passed && e.passed;
    it->exact_zero = it->exact_zero && e.exact_zero;
    it->max_residual = std::max(it->max_residual, e.max_residual);
    auto note = [&notes](const std::string& text) {
      if (notes.size() < 6 && std::find(notes.begin(), notes.end(), text) == notes.end()) notes.push_back(text);
    };
    if (!e.passed) note("fails at " + e.range);
    if (!e.notes.empty()) note(e.range + ": " + e.notes);
  }

  void fail(const std::string& identity, const std::string& range, const std::string& where, const std::string& why) {
    add({identity, where, false, false, std::numeric_limits<double>::infinity(), why}, range);
  }

  std::vector<ReportEntry> finish() {
    for (std::size_t i = 0; i < out_.size(); ++i) {
      std::string joined;
      for (const auto& n : notes_[i]) joined += (joined.empty() ? "" : "; ") + n;
      out_[i].notes = joined;
      if (out_[i].exact_zero) out_[i].max_residual = 0.0;
    }
    return out_;
  }

 private:
  std::vector<ReportEntry> out_;
  std::vector<std::vector<std::string>> notes_;
};

std::string tri(int lo_s, int hi_n) {
  return std::to_string(lo_s) + "<=s<=N<=" + std::to_string(hi_n);
}

}  // namespace

VerificationReport run_full_suite(int max_n) {
  if (max_n < 5) throw IndexOutOfRange("the verification suite needs max N >= 5");
  const int numeric_n = std::min(max_n, 20);
  const int quad_n = std::min(max_n, 15);
  Aggregator agg;

  auto guarded = [&agg](const std::string& identity, const std::string& range, const std::string& where,
                        const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      agg.fail(identity, range, where, ex.what());
    }
  };

  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s) agg.add(verify_derivative_agreement(n, s), tri(0, max_n));
  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s) agg.add(verify_half_angle_sum(n, s), tri(0, max_n));
  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s)
      for (const auto& e : verify_expansions(n, s)) agg.add(e, tri(0, max_n));
  for (int n = 1; n <= max_n; ++n) agg.add(verify_low_order_sums(n), "1<=N<=" + std::to_string(max_n));
  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s)
      for (const auto& e : verify_fns_closed_form(n, s)) agg.add(e, tri(0, max_n));
  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s) agg.add(verify_extremal_exact(n, s), tri(0, max_n));
  for (int n = 0; n <= max_n; ++n)
    for (int s = 0; s <= n; ++s) agg.add(verify_weighted_u_expansion(n, s), tri(0, max_n));
  for (int n = 4; n <= max_n; ++n)
    for (const auto& e : verify_special_orders(n)) agg.add(e, "4<=N<=" + std::to_string(max_n));
  for (int n = 0; n <= max_n; ++n) agg.add(verify_vanishing_combinations(n), "0<=N<=" + std::to_string(max_n));

  const std::string below = "0<=s<N<=" + std::to_string(numeric_n);
  for (int n = 1; n <= numeric_n; ++n)
    for (int s = 0; s < n; ++s) {
      guarded("zero_factorization", below, ns_range(n, s),
              [&] { agg.add(verify_zero_factorization(n, s), below); });
      guarded("extremal_factorization", below, ns_range(n, s),
              [&] { agg.add(verify_extremal_numeric(n, s), below); });
    }
  for (int n = 0; n <= numeric_n; ++n)
    for (int s = 0; s <= n; ++s) {
      const std::string where = ns_range(n, s);
      ReportEntry e{"extremal_on_circle", where, all_zeros_on_unit_circle(build_p(extremal_gamma(n, s))).all_on_circle,
                    false, 0.0, {}};
      e.exact_zero = e.passed;
      e.max_residual = e.passed ? 0.0 : 1.0;
      agg.add(e, tri(0, numeric_n));
      guarded("cohn_derivative_disc", tri(0, numeric_n), where,
              [&] { agg.add(verify_cohn_numeric(n, s), tri(0, numeric_n)); });
    }
  for (int n = 4; n <= quad_n; ++n)
    for (const auto& e : verify_quadrinomial_crosscheck(n)) agg.add(e, "4<=N<=" + std::to_string(quad_n));

  VerificationReport report;
  report.max_n = max_n;
  report.entries = agg.finish();
  return report;
}

std::string report_to_json(const VerificationReport& r, const std::string& tool_version) {
  nlohmann::ordered_json j;
  j["schema"] = "unitcircle.verify/1";
  j["tool"] = {{"name", "unitcircle"}, {"version", tool_version}};
  j["max_n"] = r.max_n;
  j["passed"] = r.all_passed();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json x;
    x["identity"] = e.identity;
    x["range"] = e.range;
    x["status"] = e.passed ? "pass" : "fail";
    x["exact_zero"] = e.exact_zero;
    if (std::isfinite(e.max_residual))
      x["max_residual"] = e.max_residual;
    else
      x["max_residual"] = nullptr;
    x["notes"] = e.notes;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  long passed = std::count_if(r.entries.begin(), r.entries.end(), [](const ReportEntry& e) { return e.passed; });
  os << "verification up to N=" << r.max_n << ": " << passed << "/" << r.entries.size() << " identities pass\n";
  for (const auto& e : r.entries) {
    os << (e.passed ? "PASS " : "FAIL ") << e.identity << " [" << e.range << "] ";
    if (e.exact_zero)
      os << "exact-zero";
    else
      os << "max_residual=" << e.max_residual;
    if (!e.notes.empty()) os << " (" << e.notes << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace unitcircle
