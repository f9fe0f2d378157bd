#pragma once

// Closed-form Ehrhart polynomials of the polytope families studied here.

#include <cstddef>
#include <numeric>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ehrmagic {

/// conv{e_1, ..., e_{d+1}} in R^{d+1}.
struct StandardSimplex {
  unsigned d = 1;
};

/// conv(e_1, ..., e_d, -q(e_1 + ... + e_d)); h* = 1 + q t + ... + q t^d.
struct SpikedSimplex {
  unsigned q = 1;
  unsigned d = 1;
};

/// Base polytope of the minimal matroid T_{k,n} (rank k, n elements,
/// k(n-k)+1 bases).
struct MinimalMatroid {
  unsigned k = 1;
  unsigned n = 2;
};

/// Edge polytope of the complete multipartite graph with parts of sizes q.
struct CompleteMultipartite {
  std::vector<unsigned> q;
};

/// {x in [0,1]^n : sum x_i = k}.
struct Hypersimplex {
  unsigned k = 1;
  unsigned n = 1;
};

/// conv{+-e_1, ..., +-e_d}.
struct CrossPolytope {
  unsigned d = 1;
};

/// conv(e_1, ..., e_d, -(e_1 + ... + e_d)).
struct StandardReflexiveSimplex {
  unsigned d = 1;
};

/// A polynomial supplied directly, with no polytope behind it.
struct Generic {
  Polynomial poly;
};

using FamilySpec = std::variant<StandardSimplex, SpikedSimplex, MinimalMatroid, CompleteMultipartite,
                                Hypersimplex, CrossPolytope, StandardReflexiveSimplex, Generic>;

/// Throws InvalidParameters naming the violated range.
inline void validate(const FamilySpec& spec) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw InvalidParameters(what);
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StandardSimplex> || std::is_same_v<T, CrossPolytope> ||
                      std::is_same_v<T, StandardReflexiveSimplex>) {
          need(s.d >= 1, "d >= 1 required");
        } else if constexpr (std::is_same_v<T, SpikedSimplex>) {
          need(s.d >= 1, "d >= 1 required");
          need(s.q >= 1, "q >= 1 required");
        } else if constexpr (std::is_same_v<T, MinimalMatroid>) {
          need(s.k >= 1, "k >= 1 required");
          need(s.n >= s.k + 1, "n >= k + 1 required");
        } else if constexpr (std::is_same_v<T, CompleteMultipartite>) {
          need(s.q.size() >= 2, "at least two parts required");
          for (unsigned part : s.q) need(part >= 1, "every part must be >= 1");
        } else if constexpr (std::is_same_v<T, Hypersimplex>) {
          need(s.k >= 1 && s.k <= s.n, "1 <= k <= n required");
        } else if constexpr (std::is_same_v<T, Generic>) {
          need(!s.poly.is_zero(), "generic polynomial must be nonzero");
        }
      },
      spec);
}

namespace detail {

inline Polynomial ehrhart_impl(const StandardSimplex& s) { return binomial_poly(s.d, s.d); }

inline Polynomial ehrhart_impl(const SpikedSimplex& s) {
  Polynomial tail;
  for (unsigned i = 1; i <= s.d; ++i) tail += binomial_poly(static_cast<long>(s.d) - i, s.d);
  return binomial_poly(s.d, s.d) + Rational(s.q) * tail;
}

inline Polynomial ehrhart_impl(const MinimalMatroid& s) {
  const unsigned k = s.k;
  const unsigned n = s.n;
  Polynomial sum;
  for (unsigned j = 0; j < k; ++j) sum += Rational(binomial(n - k - 1 + j, j)) * binomial_poly(j, j);
  return binomial_poly(n - k, n - k) * sum / Rational(binomial(n - 1, k - 1));
}

inline Polynomial ehrhart_impl(const CompleteMultipartite& s) {
  const unsigned d = std::accumulate(s.q.begin(), s.q.end(), 0U);
  Polynomial result = binomial_poly(Rational(2), d - 1, d - 1);
  for (unsigned part : s.q)
    for (unsigned i = 1; i <= part; ++i)
      for (unsigned j = i; j <= part; ++j)
        result -= binomial_poly(static_cast<long>(j - i) - 1, j - i) *
                  binomial_poly(static_cast<long>(d - j) - 1, d - j);
  return result;
}

inline Polynomial ehrhart_impl(const Hypersimplex& s) {
  Polynomial result;
  for (unsigned j = 0; j < s.k; ++j) {
    Polynomial term = Rational(binomial(s.n, j)) *
                      binomial_poly(Rational(s.k - j), static_cast<long>(s.n) - 1 - j, s.n - 1);
    if (j % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

inline Polynomial ehrhart_impl(const CrossPolytope& s) {
  Polynomial result;
  Integer two_pow = 1;
  for (unsigned i = 0; i <= s.d; ++i) {
    result += Rational(two_pow * binomial(s.d, i)) * binomial_poly(0, i);
    two_pow *= 2;
  }
  return result;
}

inline Polynomial ehrhart_impl(const StandardReflexiveSimplex& s) {
  Polynomial result;
  for (unsigned i = 0; i <= s.d; ++i) result += binomial_poly(static_cast<long>(s.d) - i, s.d);
  return result;
}

inline Polynomial ehrhart_impl(const Generic& s) { return s.poly; }

}  // namespace detail

inline Polynomial ehrhart(const FamilySpec& spec) {
  validate(spec);
  return std::visit([](const auto& s) { return detail::ehrhart_impl(s); }, spec);
}

/// Ehrhart polynomial of the k-th dilate: E_{kP}(x) = E_P(kx).
inline Polynomial ehrhart_dilated(const FamilySpec& spec, unsigned long k) {
  if (k == 0) throw InvalidParameters("dilation must be a positive integer");
  return scale_arg(ehrhart(spec), Rational(k));
}

/// Short label such as `cross(d=3)` for reports.
inline std::string describe(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StandardSimplex>) {
          return "simplex(d=" + std::to_string(s.d) + ")";
        } else if constexpr (std::is_same_v<T, SpikedSimplex>) {
          return "spiked(q=" + std::to_string(s.q) + ",d=" + std::to_string(s.d) + ")";
        } else if constexpr (std::is_same_v<T, MinimalMatroid>) {
          return "minimal-matroid(k=" + std::to_string(s.k) + ",n=" + std::to_string(s.n) + ")";
        } else if constexpr (std::is_same_v<T, CompleteMultipartite>) {
          std::string out = "multipartite(q=";
          for (std::size_t i = 0; i < s.q.size(); ++i) out += (i ? "," : "") + std::to_string(s.q[i]);
          return out + ")";
        } else if constexpr (std::is_same_v<T, Hypersimplex>) {
          return "hypersimplex(k=" + std::to_string(s.k) + ",n=" + std::to_string(s.n) + ")";
        } else if constexpr (std::is_same_v<T, CrossPolytope>) {
          return "cross(d=" + std::to_string(s.d) + ")";
        } else if constexpr (std::is_same_v<T, StandardReflexiveSimplex>) {
          return "reflexive-simplex(d=" + std::to_string(s.d) + ")";
        } else {
          return "poly(" + to_string(s.poly) + ")";
        }
      },
      spec);
}

}  // namespace ehrmagic
