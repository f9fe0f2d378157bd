#pragma once

// Polynomials whose complex roots all lie on Re(z) = -1/2, and the m-index
// upper bounds they admit. Roots are handled only through Sturm counts and
// rational isolating intervals.

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sturm.hpp"

namespace ehrmagic {

/// Result of cl_check. Roots come as -1/2 +- b_i sqrt(-1); squared_parts[i]
/// isolates b_i^2 (one entry per conjugate pair, repeated by multiplicity).
struct CLCertificate {
  bool is_cl = false;
  bool odd_degree_half_root = false;  ///< a lone (2x+1) factor was split off
  std::vector<sturm::RootInterval> squared_parts;
  /// squared_parts[i] isolates a root of root_factors[i] (squarefree, in v = b^2).
  std::vector<Polynomial> root_factors;
  Rational max_b_squared_upper = 0;
};

inline const Rational& cl_interval_width() {
  static const Rational w(1, 1 << 20);
  return w;
}

inline CLCertificate cl_check(const Polynomial& f) {
  const std::size_t deg = f.degree_or_throw();
  CLCertificate cert;

  // y = x + 1/2 moves the line Re = -1/2 to the imaginary axis.
  std::vector<Rational> q = shift_arg(f, Rational(-1, 2)).coeffs();
  if (deg % 2 == 1) {
    if (q[0] != 0) return cert;
    q.erase(q.begin());
    cert.odd_degree_half_root = true;
  }
  // Roots on the imaginary axis come in +-y pairs: q must be even, q(y) = r(y^2).
  std::vector<Rational> w;  // w(v) = r(-v), roots v = b^2
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i % 2 == 1) {
      if (q[i] != 0) return cert;
      continue;
    }
    w.push_back((i / 2) % 2 == 0 ? q[i] : Rational(-q[i]));
  }
  const Polynomial wp(w);
  if (*wp.degree() == 0) {
    cert.is_cl = true;
    return cert;
  }

  // Every root of w must be real and >= 0.
  const auto factors = sturm::squarefree_decomposition(wp);
  for (const auto& s : factors) {
    if (*s.degree() == 0) continue;
    std::size_t at_zero = eval(s, 0) == 0 ? 1 : 0;
    if (at_zero + sturm::count_roots_above(s, 0) != *s.degree()) return cert;
  }

  for (std::size_t m = 0; m < factors.size(); ++m) {
    Polynomial s = factors[m];
    if (*s.degree() == 0) continue;
    std::vector<std::pair<sturm::RootInterval, Polynomial>> roots;
    if (eval(s, 0) == 0) {
      roots.push_back({{0, 0}, s});
      s = divmod(s, Polynomial::x()).first;
    }
    if (*s.degree() > 0) {
      Rational hi = sturm::cauchy_bound(s);
      while (eval(s, hi) == 0) hi += 1;
      for (const auto& iv : sturm::isolate_roots(s, 0, hi, cl_interval_width())) roots.push_back({iv, s});
    }
    for (const auto& [iv, poly] : roots) {
      for (std::size_t rep = 0; rep <= m; ++rep) {
        cert.squared_parts.push_back(iv);
        cert.root_factors.push_back(poly);
      }
      if (iv.hi > cert.max_b_squared_upper) cert.max_b_squared_upper = iv.hi;
    }
  }
  cert.is_cl = true;
  return cert;
}

/// Smallest k with (kx + 1/2)^2 + b^2 magic positive as a real threshold:
/// 1/2 + 2 b^2.
inline Rational quadratic_threshold(const Rational& b_squared) {
  if (b_squared < 0) throw NegativeInput();
  return Rational(1, 2) + 2 * b_squared;
}

namespace detail {

/// Exact ceil(1/2 + 2 v) for the unique root v of the squarefree s in the
/// isolating interval. Falls back to the upper endpoint's ceiling if the
/// refinement budget runs out.
inline Integer threshold_ceiling(const Polynomial& s, sturm::RootInterval iv) {
  auto g = [](const Rational& v) { return Rational(Rational(1, 2) + 2 * v); };
  if (iv.lo == iv.hi) return ceil(g(iv.lo));
  sturm::Chain chain(s);
  for (int step = 0; step < 4096; ++step) {
    // The root is strictly above lo, so its ceiling is at least floor(g(lo)) + 1.
    Integer lower = floor(g(iv.lo)) + 1;
    Integer upper = ceil(g(iv.hi));
    if (lower == upper) return upper;
    // Breakpoint v with g(v) = lower; it may itself be the root.
    Rational bp = (Rational(lower) - Rational(1, 2)) / 2;
    if (bp > iv.lo && bp <= iv.hi && eval(s, bp) == 0) return lower;
    Rational mid = (iv.lo + iv.hi) / 2;
    if (eval(s, mid) == 0) return ceil(g(mid));
    if (sturm::count_roots(chain, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return ceil(g(iv.hi));
}

}  // namespace detail

/// ceil(1/2 + 2 max b_i^2), an upper bound on the m-index of a CL polynomial.
inline Integer cl_mindex_bound(const Polynomial& f) {
  CLCertificate cert = cl_check(f);
  if (!cert.is_cl) throw NotCL();
  Integer best = 1;  // ceil(1/2): the odd factor and b = 0 pairs
  for (std::size_t i = 0; i < cert.squared_parts.size(); ++i) {
    Integer c = detail::threshold_ceiling(cert.root_factors[i], cert.squared_parts[i]);
    if (c > best) best = c;
  }
  return best;
}

/// ceil(1/2 + 2 d^2 (d - 1/2)^2), from the root-norm bound |alpha + 1/2| <= d(d - 1/2).
inline Integer dimension_only_bound(unsigned long d) {
  if (d == 0) throw InvalidParameters("d >= 1 required");
  Rational dd(d);
  Rational r = dd * (dd - Rational(1, 2));
  return ceil(Rational(Rational(1, 2) + 2 * r * r));
}

}  // namespace ehrmagic
