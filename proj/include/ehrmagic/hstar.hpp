#pragma once

// Conversions between the monomial basis, the binomial basis C(x+d-i, d)
// (h*-vectors) and the magic basis, plus exact real-rootedness and the
// palindromicity tests that characterize reflexive polytopes.

#include <cstddef>
#include <string>
#include <vector>

#include "magic_basis.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"

namespace ehrmagic {

enum class HStarProvenance {
  LatticePolytope,  ///< expected to be non-negative integers with h_0 = 1
  General,
};

/// Numerator h_0 + h_1 t + ... + h_d t^d of sum f(n) t^n = h(t) / (1-t)^(d+1).
struct HStarVector {
  std::size_t d = 0;
  std::vector<Rational> h;
  HStarProvenance provenance = HStarProvenance::General;

  /// h as a polynomial in t.
  Polynomial as_polynomial() const { return Polynomial(h); }

  /// Integrality warnings; empty unless provenance is LatticePolytope.
  std::vector<std::string> warnings() const {
    std::vector<std::string> w;
    if (provenance != HStarProvenance::LatticePolytope) return w;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!is_integer(h[i])) w.push_back("h*_" + std::to_string(i) + " = " + to_string(h[i]) + " is not an integer");
      if (h[i] < 0) w.push_back("h*_" + std::to_string(i) + " = " + to_string(h[i]) + " is negative");
    }
    if (!h.empty() && h[0] != 1) w.push_back("h*_0 = " + to_string(h[0]) + " differs from 1");
    return w;
  }

  friend bool operator==(const HStarVector& a, const HStarVector& b) { return a.d == b.d && a.h == b.h; }
};

/// sum h_i C(x + d - i, d).
inline Polynomial ehrhart_from_hstar(const HStarVector& v) {
  Polynomial acc;
  for (std::size_t i = 0; i <= v.d && i < v.h.size(); ++i)
    if (v.h[i] != 0) acc += v.h[i] * binomial_poly(static_cast<long>(v.d - i), static_cast<unsigned>(v.d));
  return acc;
}

namespace detail {

/// h_i = sum_{j<=i} (-1)^j C(d+1, j) f(i - j), using degree d.
inline std::vector<Rational> hstar_coeffs(const Polynomial& f, std::size_t d) {
  std::vector<Rational> values(d + 1);
  for (std::size_t n = 0; n <= d; ++n) values[n] = eval(f, Rational(static_cast<unsigned long>(n)));
  std::vector<Rational> h(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Rational term = Rational(binomial(d + 1, j)) * values[i - j];
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h[i] = acc;
  }
  return h;
}

}  // namespace detail

inline HStarVector hstar_from_ehrhart(const Polynomial& f) {
  const std::size_t d = f.degree_or_throw();
  return {d, detail::hstar_coeffs(f, d), HStarProvenance::LatticePolytope};
}

/// h(t) for the polynomial sum c_j n^j (n+1)^(d-j).
inline HStarVector numerator_from_magic(const MagicExpansion& e) {
  return {e.d, detail::hstar_coeffs(from_magic(e), e.d), HStarProvenance::General};
}

/// h_i = h_{d-i} for all i, and h_d != 0.
inline bool is_palindromic(const HStarVector& v) {
  if (v.h.size() != v.d + 1 || v.h[v.d] == 0) return false;
  for (std::size_t i = 0; i <= v.d; ++i)
    if (v.h[i] != v.h[v.d - i]) return false;
  return true;
}

/// a_j = a_{d-j} for the magic expansion of f.
inline bool reflexive_magic_check(const Polynomial& f) {
  MagicExpansion e = to_magic(f, 1);
  for (std::size_t j = 0; j <= e.d; ++j)
    if (e.coeffs[j] != e.coeffs[e.d - j]) return false;
  return true;
}

/// Every complex root of f is real. Constants are real-rooted.
inline bool is_real_rooted(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  Polynomial s = sturm::squarefree_part(f);
  return sturm::count_real_roots(s) == *s.degree();
}

}  // namespace ehrmagic
