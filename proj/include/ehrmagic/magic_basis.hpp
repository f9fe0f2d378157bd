#pragma once

// Expansion in the basis {x^i (x+1)^(d-i)}, magic positivity, and the
// dilation searches built on it (m-index and the real threshold).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace ehrmagic {

/// Coefficients a_0..a_d of sum a_i x^i (x+1)^(d-i).
struct MagicExpansion {
  std::size_t d = 0;
  std::vector<Rational> coeffs;

  bool is_nonnegative() const {
    for (const auto& a : coeffs)
      if (a < 0) return false;
    return true;
  }

  friend bool operator==(const MagicExpansion&, const MagicExpansion&) = default;
};

/// g_i(k) = sum_{j<=i} (-1)^(i-j) C(d-j, i-j) b_j k^j, the coefficient of
/// x^i (x+1)^(d-i) in f(kx) as a polynomial in k.
struct ThresholdPolynomials {
  std::size_t d = 0;
  std::vector<Polynomial> g;
};

struct MIndexResult {
  std::optional<Integer> value;  ///< nullopt when the capped scan found nothing
  Integer search_bound_used;
  bool monotone_search = false;
};

inline constexpr std::uint64_t default_scan_cap = 10000;

namespace detail {

inline Rational signed_binomial(std::size_t d, std::size_t i, std::size_t j) {
  Rational c(binomial(d - j, i - j));
  return ((i - j) % 2 == 0) ? c : Rational(-c);
}

inline bool all_coefficients_positive(const Polynomial& f) {
  for (const auto& c : f.coeffs())
    if (c <= 0) return false;
  return true;
}

}  // namespace detail

/// Expansion of f(kx) in the magic basis of degree d = deg f.
inline MagicExpansion to_magic(const Polynomial& f, const Rational& k) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (k == 0) throw ZeroDilation();
  const std::size_t d = *f.degree();
  std::vector<Rational> scaled = scale_arg(f, k).coeffs();
  MagicExpansion e{d, std::vector<Rational>(d + 1)};
  for (std::size_t i = 0; i <= d; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= i; ++j)
      if (scaled[j] != 0) acc += detail::signed_binomial(d, i, j) * scaled[j];
    e.coeffs[i] = acc;
  }
  return e;
}

/// sum a_i x^i (x+1)^(d-i), expanded directly.
inline Polynomial from_magic(const MagicExpansion& e) {
  const Polynomial x = Polynomial::x();
  const Polynomial x1({Rational(1), Rational(1)});
  std::vector<Polynomial> x1_pow(e.d + 1);
  x1_pow[0] = Polynomial::constant(1);
  for (std::size_t i = 1; i <= e.d; ++i) x1_pow[i] = x1_pow[i - 1] * x1;
  Polynomial acc;
  Polynomial x_pow = Polynomial::constant(1);
  for (std::size_t i = 0; i <= e.d; ++i) {
    if (i < e.coeffs.size() && e.coeffs[i] != 0) acc += e.coeffs[i] * (x_pow * x1_pow[e.d - i]);
    x_pow *= x;
  }
  return acc;
}

/// Non-strict: every magic coefficient of f is >= 0.
inline bool is_magic_positive(const Polynomial& f) { return to_magic(f, 1).is_nonnegative(); }

/// is_magic_positive(f(kx)).
inline bool is_magic_positive_at(const Polynomial& f, const Rational& k) {
  return to_magic(f, k).is_nonnegative();
}

inline ThresholdPolynomials threshold_polys(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const std::size_t d = *f.degree();
  ThresholdPolynomials t{d, {}};
  t.g.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<Rational> c(i + 1);
    for (std::size_t j = 0; j <= i; ++j) c[j] = detail::signed_binomial(d, i, j) * f[j];
    t.g.emplace_back(std::move(c));
  }
  return t;
}

/// Integer K such that g_i(k) > 0 for every i and every real k >= K, taken
/// as the ceiling of the largest Cauchy root bound among the g_i.
inline Integer search_bound(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (!detail::all_coefficients_positive(f)) throw NonPositiveCoefficients();
  ThresholdPolynomials t = threshold_polys(f);
  Rational best = 1;
  for (std::size_t i = 1; i <= t.d; ++i) {
    const auto& c = t.g[i].coeffs();
    Rational m = 0;
    for (std::size_t j = 0; j < i; ++j) {
      Rational r = abs(c[j]) / c[i];
      if (r > m) m = r;
    }
    if (m + 1 > best) best = m + 1;
  }
  return ceil(best);
}

/// Smallest positive integer k with f(kx) magic positive.
///
/// Strictly positive coefficients: binary search on [1, search_bound(f)],
/// valid because magic positivity of f(kx) persists for every k' >= k.
/// Otherwise a linear scan up to scan_cap with no monotonicity claim.
inline MIndexResult m_index(const Polynomial& f, std::uint64_t scan_cap = default_scan_cap) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (detail::all_coefficients_positive(f)) {
    Integer hi = search_bound(f);
    MIndexResult r{std::nullopt, hi, true};
    if (is_magic_positive_at(f, 1)) {
      r.value = Integer(1);
      return r;
    }
    Integer lo = 1;  // not magic positive at lo, magic positive at hi
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (is_magic_positive_at(f, Rational(mid)))
        hi = mid;
      else
        lo = mid;
    }
    r.value = hi;
    return r;
  }
  MIndexResult r{std::nullopt, Integer(static_cast<unsigned long>(scan_cap)), false};
  for (std::uint64_t k = 1; k <= scan_cap; ++k) {
    if (is_magic_positive_at(f, Rational(static_cast<unsigned long>(k)))) {
      r.value = Integer(static_cast<unsigned long>(k));
      break;
    }
  }
  return r;
}

/// Bracket [lo, hi] around inf{k > 0 : f(kx) magic positive} with
/// hi - lo <= tol; hi is magic positive, lo is not (or lo = 0).
inline std::pair<Rational, Rational> magic_threshold(const Polynomial& f, const Rational& tol) {
  if (tol <= 0) throw InvalidParameters("tolerance must be positive");
  Rational hi(search_bound(f));
  Rational lo = 0;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (is_magic_positive_at(f, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

}  // namespace ehrmagic
