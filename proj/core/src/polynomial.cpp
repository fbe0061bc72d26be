#include "unitcircle/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "unitcircle/errors.hpp"

namespace unitcircle {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p *= Polynomial({Rational(-r), Rational(1)});
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial();
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw DivisionByZero();
  for (auto& x : coeffs_) x /= c;
  return *this;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

Polynomial z_pow(std::size_t k) { return Polynomial::monomial(1, k); }

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial derivative(const Polynomial& p, unsigned s) {
  const auto& c = p.coeffs();
  if (c.size() <= s) return {};
  std::vector<Rational> out(c.size() - s);
  for (std::size_t i = s; i < c.size(); ++i) {
    Integer falling = 1;
    for (std::size_t k = 0; k < s; ++k) falling *= static_cast<unsigned long>(i - k);
    out[i - s] = c[i] * falling;
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.degree() < q.degree()) return {Polynomial{}, p};

  std::vector<Rational> rem = p.coeffs();
  const auto& d = q.coeffs();
  const std::size_t dq = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dq);
  const Rational& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + dq] / lead;
    if (sgn(f) == 0) continue;
    quot[k] = f;
    for (std::size_t i = 0; i <= dq; ++i) rem[k + i] -= f * d[i];
  }
  rem.resize(dq);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw NonzeroRemainder();
  return quot;
}

Rational content(const Polynomial& p) {
  if (p.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / content(p);
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = primitive_part(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Polynomial reversed(const Polynomial& p) {
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

Polynomial scale_argument(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out = p.coeffs();
  Rational power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial::constant(*it);
  return acc;
}

SquareFreeDecomposition squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  SquareFreeDecomposition out;
  if (p.degree() < 1) return out;

  // Yun's algorithm.
  Polynomial dp = derivative(p);
  Polynomial a = gcd(p, dp);
  Polynomial b = divide_exact(p, a);
  Polynomial c = divide_exact(dp, a);
  Polynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial f = gcd(b, d);
    b = divide_exact(b, f);
    c = divide_exact(d, f);
    d = c - derivative(b);
    if (f.degree() > 0) out.factors.push_back({monic(f), i});
  }
  return out;
}

int root_multiplicity(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) throw ZeroPolynomial();
  const Polynomial linear({Rational(-x), Rational(1)});
  Polynomial q = p;
  int m = 0;
  while (q.degree() >= 1 && sgn(q(x)) == 0) {
    q = divide_exact(q, linear);
    ++m;
  }
  return m;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(primitive_part(p));
  if (p.degree() < 1) return seq;
  seq.push_back(primitive_part(derivative(p)));
  while (true) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // content() is positive, so normalizing keeps the sign of -r.
    seq.push_back(primitive_part(-r));
  }
  return seq;
}

namespace {

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

// Distinct roots of a square-free f in [a, b]. Endpoint roots are booked by
// exact evaluation and divided out so the Sturm count runs on an interval
// whose endpoints are not roots.
int count_squarefree(Polynomial f, const Rational& a, const Rational& b) {
  if (f.degree() < 1) return 0;
  int endpoint_roots = 0;
  for (const Rational* e : {&a, &b}) {
    if (f.degree() >= 1 && f.sign_at(*e) == 0) {
      f = divide_exact(f, Polynomial({Rational(-*e), Rational(1)}));
      ++endpoint_roots;
    }
  }
  if (f.degree() < 1) return endpoint_roots;
  const auto seq = sturm_sequence(f);
  return endpoint_roots + sign_variations(seq, a) - sign_variations(seq, b);
}

}  // namespace

int sturm_count(const Polynomial& p, const Rational& a, const Rational& b, bool with_multiplicity) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (!(a < b)) throw InvalidInterval("sturm_count needs a < b");
  if (p.degree() < 1) return 0;

  if (with_multiplicity) {
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decompose(p).factors)
      total += mult * count_squarefree(factor, a, b);
    return total;
  }
  const Polynomial g = gcd(p, derivative(p));
  return count_squarefree(divide_exact(p, g), a, b);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(Rational(p.coeffs()[i] / lead)));
  return m + 1;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace unitcircle
