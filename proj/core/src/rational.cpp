#include "unitcircle/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "unitcircle/errors.hpp"

namespace unitcircle {

Rational ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw IndexOutOfRange("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer pow2(long e) {
  if (e < 0) throw IndexOutOfRange("negative power of two requested as an integer");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = strip(text);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), s);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(s) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw ParseError("malformed decimal: '" + std::string(s) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made rational");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace unitcircle
