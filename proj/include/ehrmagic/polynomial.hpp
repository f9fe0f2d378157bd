#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ehrmagic {

/// Univariate polynomial with exact rational coefficients in the monomial
/// basis. coeffs()[i] is the coefficient of x^i. Trailing zeros are stripped
/// after every operation, so the zero polynomial has an empty coefficient list
/// and no degree.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// c * x^n
  static Polynomial monomial(const Rational& c, std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Degree of a polynomial known to be nonzero.
  std::size_t degree_or_throw() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.size() - 1;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  const Rational& leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  Polynomial& operator/=(const Rational& s) {
    if (s == 0) throw InvalidParameters("division of a polynomial by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

/// p(k x) = sum b_i k^i x^i.
inline Polynomial scale_arg(const Polynomial& p, const Rational& k) {
  std::vector<Rational> out(p.coeffs());
  Rational kp = 1;
  for (auto& c : out) {
    c *= kp;
    kp *= k;
  }
  return Polynomial(std::move(out));
}

/// Horner evaluation.
inline Rational eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Composition p(q(x)).
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial::constant(*it);
  return acc;
}

/// p(x + c) by repeated synthetic division (Taylor shift).
inline Polynomial shift_arg(const Polynomial& p, const Rational& c) {
  std::vector<Rational> a(p.coeffs());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  return Polynomial(std::move(a));
}

inline Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

/// C(arg, d) = prod_{j<d} (arg - j) / d! for a polynomial argument.
inline Polynomial binomial_of(const Polynomial& arg, unsigned d) {
  Polynomial r = Polynomial::constant(1);
  for (unsigned j = 0; j < d; ++j) r *= arg - Polynomial::constant(j);
  return r / Rational(factorial(d));
}

/// C(x + shift, d) as a polynomial in x; leading coefficient 1/d!.
inline Polynomial binomial_poly(long shift, unsigned d) {
  return binomial_of(Polynomial({Rational(shift), Rational(1)}), d);
}

/// C(a x + shift, d).
inline Polynomial binomial_poly(const Rational& a, long shift, unsigned d) {
  return binomial_of(Polynomial({Rational(shift), a}), d);
}

/// Euclidean division: p = quot * q + rem with deg rem < deg q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
  const std::size_t dq = q.degree_or_throw();
  if (p.is_zero() || *p.degree() < dq) return {Polynomial(), p};
  std::vector<Rational> r(p.coeffs());
  std::vector<Rational> quot(r.size() - dq);
  const Rational& lead = q.leading();
  for (std::size_t i = r.size(); i-- > dq;) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lead;
    quot[i - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) r[i - dq + j] -= f * q.coeffs()[j];
  }
  r.resize(dq);
  return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Human-readable form, highest degree first, e.g. `x^2 + 3/2*x + 1`.
inline std::string to_string(const Polynomial& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace ehrmagic
