#pragma once

// Brute-force lattice point enumeration for the polytope families. This is
// the validation oracle for the closed forms in families.hpp and shares no
// code with them.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "rational.hpp"

namespace ehrmagic {

struct LatticePointCount {
  FamilySpec spec;
  unsigned long dilation = 1;
  unsigned long n = 1;
  Integer count;
};

inline constexpr double lattice_enumeration_limit = 1e7;

namespace detail {

/// Integer points of a box, optionally restricted to a hyperplane
/// sum x_i = fixed_sum (the last coordinate is then determined), filtered by
/// a predicate.
struct BoxEnumeration {
  std::vector<long> lo;
  std::vector<long> hi;
  std::optional<long> fixed_sum;
  std::function<bool(std::span<const long>)> accept = [](std::span<const long>) { return true; };

  double estimate() const {
    double e = 1;
    std::size_t free = fixed_sum ? lo.size() - 1 : lo.size();
    for (std::size_t i = 0; i < free; ++i) e *= static_cast<double>(hi[i] - lo[i] + 1);
    return e;
  }

  std::uint64_t count() const {
    const std::size_t dim = lo.size();
    if (dim == 0) return 1;
    // Suffix bounds of reachable sums, for pruning along the hyperplane.
    std::vector<long> min_rest(dim + 1, 0), max_rest(dim + 1, 0);
    for (std::size_t i = dim; i-- > 0;) {
      min_rest[i] = min_rest[i + 1] + lo[i];
      max_rest[i] = max_rest[i + 1] + hi[i];
    }
    std::vector<long> x(dim);
    std::uint64_t total = 0;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long partial) {
      if (fixed_sum) {
        long need = *fixed_sum - partial;
        if (need < min_rest[i] || need > max_rest[i]) return;
        if (i + 1 == dim) {
          x[i] = need;
          if (accept(x)) ++total;
          return;
        }
      } else if (i == dim) {
        if (accept(x)) ++total;
        return;
      }
      for (long v = lo[i]; v <= hi[i]; ++v) {
        x[i] = v;
        rec(i + 1, partial + v);
      }
    };
    rec(0, 0);
    return total;
  }
};

inline long sum_of(std::span<const long> x) {
  long s = 0;
  for (long v : x) s += v;
  return s;
}

inline BoxEnumeration box(std::size_t dim, long lo, long hi) {
  BoxEnumeration b;
  b.lo.assign(dim, lo);
  b.hi.assign(dim, hi);
  return b;
}

/// t * conv(e_1..e_d, -q(e_1+..+e_d)) in Z^d:
/// sum x <= t and q*sum x - (q d + 1) x_i <= q t for every i.
inline BoxEnumeration spiked_box(long q, long d, long t) {
  BoxEnumeration b = box(static_cast<std::size_t>(d), -q * t, t);
  b.accept = [q, d, t](std::span<const long> x) {
    long s = sum_of(x);
    if (s > t) return false;
    for (long xi : x)
      if (q * s - (q * d + 1) * xi > q * t) return false;
    return true;
  };
  return b;
}

inline BoxEnumeration enumeration_for(const StandardSimplex& s, long t) {
  BoxEnumeration b = box(s.d + 1, 0, t);
  b.fixed_sum = t;
  return b;
}

inline BoxEnumeration enumeration_for(const SpikedSimplex& s, long t) { return spiked_box(s.q, s.d, t); }

inline BoxEnumeration enumeration_for(const StandardReflexiveSimplex& s, long t) { return spiked_box(1, s.d, t); }

/// Bases of T_{k,n}: the k series elements, or k-1 of them plus one of the
/// n-k parallel elements. Its base polytope is the slice of [0,1]^n at
/// sum = k with the parallel class summing to at most 1.
inline BoxEnumeration enumeration_for(const MinimalMatroid& s, long t) {
  BoxEnumeration b = box(s.n, 0, t);
  b.fixed_sum = static_cast<long>(s.k) * t;
  const std::size_t first_parallel = s.k;
  b.accept = [first_parallel, t](std::span<const long> x) {
    return sum_of(x.subspan(first_parallel)) <= t;
  };
  return b;
}

/// Rank-2 matroid with the parts as parallel classes: sum x = 2t and each
/// part sums to at most t.
inline BoxEnumeration enumeration_for(const CompleteMultipartite& s, long t) {
  const std::size_t d = std::accumulate(s.q.begin(), s.q.end(), std::size_t{0});
  BoxEnumeration b = box(d, 0, t);
  b.fixed_sum = 2 * t;
  std::vector<unsigned> parts = s.q;
  b.accept = [parts, t](std::span<const long> x) {
    std::size_t offset = 0;
    for (unsigned part : parts) {
      if (sum_of(x.subspan(offset, part)) > t) return false;
      offset += part;
    }
    return true;
  };
  return b;
}

inline BoxEnumeration enumeration_for(const Hypersimplex& s, long t) {
  BoxEnumeration b = box(s.n, 0, t);
  b.fixed_sum = static_cast<long>(s.k) * t;
  return b;
}

inline BoxEnumeration enumeration_for(const CrossPolytope& s, long t) {
  BoxEnumeration b = box(s.d, -t, t);
  b.accept = [t](std::span<const long> x) {
    long s1 = 0;
    for (long v : x) s1 += v < 0 ? -v : v;
    return s1 <= t;
  };
  return b;
}

}  // namespace detail

/// |n (dilation P) cap Z^D| by direct enumeration.
inline LatticePointCount lattice_count(const FamilySpec& spec, unsigned long dilation, unsigned long n) {
  if (dilation == 0 || n == 0) throw InvalidParameters("dilation and n must be positive");
  if (std::holds_alternative<Generic>(spec)) throw UnsupportedGeneric();
  validate(spec);
  const long t = static_cast<long>(dilation * n);
  detail::BoxEnumeration e = std::visit(
      [t](const auto& s) -> detail::BoxEnumeration {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Generic>) {
          throw UnsupportedGeneric();
        } else {
          return detail::enumeration_for(s, t);
        }
      },
      spec);
  if (e.estimate() > lattice_enumeration_limit)
    throw TooLarge(describe(spec) + " at t=" + std::to_string(t));
  return {spec, dilation, n, Integer(static_cast<unsigned long>(e.count()))};
}

/// Family instances used for formula-versus-enumeration agreement checks.
inline std::vector<FamilySpec> oracle_sweep() {
  std::vector<FamilySpec> out;
  for (unsigned d = 1; d <= 4; ++d) out.push_back(StandardSimplex{d});
  for (unsigned q = 1; q <= 3; ++q)
    for (unsigned d = 1; d <= 3; ++d) out.push_back(SpikedSimplex{q, d});
  out.push_back(MinimalMatroid{1, 4});
  out.push_back(MinimalMatroid{2, 4});
  out.push_back(MinimalMatroid{2, 5});
  out.push_back(CompleteMultipartite{{1, 1, 1}});
  out.push_back(CompleteMultipartite{{2, 2}});
  out.push_back(CompleteMultipartite{{1, 2, 3}});
  out.push_back(Hypersimplex{2, 4});
  out.push_back(Hypersimplex{2, 5});
  out.push_back(Hypersimplex{3, 6});
  for (unsigned d = 1; d <= 3; ++d) out.push_back(CrossPolytope{d});
  for (unsigned d = 1; d <= 3; ++d) out.push_back(StandardReflexiveSimplex{d});
  return out;
}

}  // namespace ehrmagic
