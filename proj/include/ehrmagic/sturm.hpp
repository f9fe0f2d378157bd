#pragma once

// Exact real-root counting and isolation. No floating point: every decision
// is a sign of an exact rational.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace ehrmagic::sturm {

/// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (*p.degree() == 0) return Polynomial::constant(1);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

/// Yun's algorithm: p = lc * prod_m factors[m-1]^m with each factor squarefree,
/// monic and pairwise coprime. Trivial factors are returned as the constant 1.
inline std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<Polynomial> out;
  if (*p.degree() == 0) return out;
  Polynomial dp = derivative(p);
  Polynomial a = gcd(p, dp);
  Polynomial b = divmod(p, a).first;
  Polynomial c = divmod(dp, a).first;
  Polynomial d = c - derivative(b);
  while (*b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(monic(a));
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - derivative(b);
  }
  while (!out.empty() && *out.back().degree() == 0) out.pop_back();
  return out;
}

/// Sturm chain p, p', -rem(...), ... with each term divided by the absolute
/// value of its leading coefficient (positive rescaling keeps every sign).
class Chain {
 public:
  explicit Chain(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    chain_.push_back(normalize(p));
    Polynomial next = derivative(p);
    while (!next.is_zero()) {
      chain_.push_back(normalize(next));
      next = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
    }
  }

  /// Sign changes of the chain evaluated at x, zeros dropped.
  std::size_t variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) s.push_back(sgn(eval(q, x)));
    return count(s);
  }

  /// Sign changes at +inf (positive = true) or -inf.
  std::size_t variations_at_infinity(bool positive) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) {
      int lead = sgn(q.leading());
      if (!positive && (*q.degree() % 2 == 1)) lead = -lead;
      s.push_back(lead);
    }
    return count(s);
  }

  const std::vector<Polynomial>& terms() const { return chain_; }

 private:
  static Polynomial normalize(const Polynomial& p) { return p / abs(p.leading()); }

  static std::size_t count(const std::vector<int>& s) {
    std::size_t changes = 0;
    int prev = 0;
    for (int v : s) {
      if (v == 0) continue;
      if (prev != 0 && v != prev) ++changes;
      prev = v;
    }
    return changes;
  }

  std::vector<Polynomial> chain_;
};

/// Distinct real roots of p.
inline std::size_t count_real_roots(const Polynomial& p) {
  Chain c(squarefree_part(p));
  return c.variations_at_infinity(false) - c.variations_at_infinity(true);
}

/// Distinct roots in (lo, hi] of a squarefree polynomial whose chain is given.
inline std::size_t count_roots(const Chain& c, const Rational& lo, const Rational& hi) {
  return c.variations_at(lo) - c.variations_at(hi);
}

/// Distinct roots of p in (lo, +inf).
inline std::size_t count_roots_above(const Polynomial& p, const Rational& lo) {
  Polynomial s = squarefree_part(p);
  if (eval(s, lo) == 0) s = divmod(s, Polynomial({Rational(-lo), Rational(1)})).first;
  if (*s.degree() == 0) return 0;
  Chain c(s);
  return c.variations_at(lo) - c.variations_at_infinity(true);
}

/// Cauchy bound: every complex root z of p satisfies |z| < bound.
inline Rational cauchy_bound(const Polynomial& p) {
  const auto& c = p.coeffs();
  const std::size_t n = p.degree_or_throw();
  Rational m = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Rational r = abs(c[j] / c[n]);
    if (r > m) m = r;
  }
  return m + 1;
}

/// Closed interval [lo, hi] containing exactly one root; lo == hi when the
/// root is known exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolates every real root of the squarefree polynomial s lying in
/// (lo, hi), where lo and hi are not roots, and shrinks each isolating
/// interval to width <= max_width. Results are sorted ascending.
inline std::vector<RootInterval> isolate_roots(const Polynomial& s, const Rational& lo,
                                               const Rational& hi, const Rational& max_width) {
  std::vector<RootInterval> out;
  if (*s.degree() == 0) return out;
  Chain chain(s);

  // Splitting point strictly inside (a, b) that is not a root.
  auto split_point = [&](const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    for (int t = 3; eval(s, m) == 0; ++t) m = a + (b - a) / t;
    return m;
  };

  // Refines (a, b] holding exactly one root; a and b are not roots.
  auto refine = [&](Rational a, Rational b) {
    while (b - a > max_width) {
      Rational m = (a + b) / 2;
      if (eval(s, m) == 0) return RootInterval{m, m};
      if (count_roots(chain, a, m) == 1)
        b = m;
      else
        a = m;
    }
    return RootInterval{a, b};
  };

  std::vector<std::pair<Rational, Rational>> todo{{lo, hi}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    std::size_t n = count_roots(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(refine(a, b));
      continue;
    }
    Rational m = split_point(a, b);
    todo.emplace_back(a, m);
    todo.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace ehrmagic::sturm
