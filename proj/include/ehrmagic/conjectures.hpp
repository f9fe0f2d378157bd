#pragma once

// Counterexample search for fixed dilation factors, and scanners that
// tabulate the open m-index questions. Scanners report, they never conclude.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "magic_basis.hpp"

namespace ehrmagic {

/// Indices i whose magic coefficient in f(kx) is negative.
inline std::vector<std::size_t> negative_magic_indices(const Polynomial& f, const Rational& k) {
  MagicExpansion e = to_magic(f, k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] < 0) out.push_back(i);
  return out;
}

/// Smallest q >= 1 such that the k-th dilate of P_{q,d} is not magic positive.
/// The scan is linear in q because nothing guarantees monotonicity in q.
inline unsigned counterexample_q(unsigned d, unsigned long k, unsigned q_cap = 1000000) {
  if (d < 3) throw InvalidParameters("counterexample search needs d >= 3");
  if (k == 0) throw InvalidParameters("dilation must be a positive integer");
  for (unsigned q = 1; q <= q_cap; ++q)
    if (!is_magic_positive(ehrhart_dilated(SpikedSimplex{q, d}, k))) return q;
  throw TooLarge("no counterexample with q <= " + std::to_string(q_cap));
}

enum class Question {
  MinimalMatroid,  ///< m-index(B(T_{k,n})) = n - k for 1 <= k <= floor(n/2)?
  Multipartite,    ///< m-index(P_{G_q}) in {max q_i, floor(sum/2), ceil(sum/2)}?
  Hypersimplex,    ///< m-index(Delta_{floor(n/2)-k, n}) = k + 2 for 0 <= k <= floor(n/2) - 2?
};

inline std::string question_label(Question q) {
  switch (q) {
    case Question::MinimalMatroid: return "minimal-matroid";
    case Question::Multipartite: return "multipartite";
    case Question::Hypersimplex: return "hypersimplex";
  }
  return "?";
}

struct ConjectureRow {
  FamilySpec spec;
  std::optional<Integer> computed;
  std::vector<Integer> conjectured;  ///< candidate values; a match is membership
  bool match = false;
  std::string note;
};

struct ConjectureReport {
  Question question;
  std::vector<ConjectureRow> rows;

  std::size_t mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.computed && !r.match; }));
  }
};

/// Inclusive bounds. For MinimalMatroid and Hypersimplex the range is over n;
/// for Multipartite it is over the total number of vertices.
struct ScanRange {
  unsigned lo = 1;
  unsigned hi = 1;
};

namespace detail {

inline ConjectureRow evaluate_row(FamilySpec spec, std::vector<Integer> conjectured, std::uint64_t scan_cap) {
  ConjectureRow row{std::move(spec), std::nullopt, std::move(conjectured), false, ""};
  MIndexResult r = m_index(ehrhart(row.spec), scan_cap);
  if (!r.value) {
    row.note = "skipped: no magic-positive dilation up to " + to_string(r.search_bound_used);
    return row;
  }
  row.computed = r.value;
  row.match = std::find(row.conjectured.begin(), row.conjectured.end(), *r.value) != row.conjectured.end();
  if (!r.monotone_search) row.note = "non-monotone scan";
  return row;
}

/// Non-decreasing part lists with at least min_parts parts summing to total.
inline void partitions(unsigned total, unsigned min_part, std::vector<unsigned>& cur, std::size_t min_parts,
                       std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    if (cur.size() >= min_parts) out.push_back(cur);
    return;
  }
  for (unsigned p = min_part; p <= total; ++p) {
    cur.push_back(p);
    partitions(total - p, p, cur, min_parts, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Candidate set {max q_i, floor(sum/2), ceil(sum/2)} in that order.
inline std::vector<Integer> multipartite_candidates(const std::vector<unsigned>& q) {
  unsigned sum = 0;
  unsigned mx = 0;
  for (unsigned v : q) {
    sum += v;
    mx = std::max(mx, v);
  }
  return {Integer(mx), Integer(sum / 2), Integer((sum + 1) / 2)};
}

inline ConjectureRow scan_multipartite(const std::vector<unsigned>& q, std::uint64_t scan_cap = default_scan_cap) {
  return detail::evaluate_row(CompleteMultipartite{q}, multipartite_candidates(q), scan_cap);
}

/// Rows are emitted in increasing parameter order.
inline ConjectureReport conjecture_scan(Question which, ScanRange range, std::uint64_t scan_cap = default_scan_cap) {
  ConjectureReport report{which, {}};
  switch (which) {
    case Question::MinimalMatroid:
      for (unsigned n = std::max(2U, range.lo); n <= range.hi; ++n)
        for (unsigned k = 1; k <= n / 2; ++k)
          report.rows.push_back(detail::evaluate_row(MinimalMatroid{k, n}, {Integer(n - k)}, scan_cap));
      break;
    case Question::Multipartite:
      for (unsigned total = std::max(3U, range.lo); total <= range.hi; ++total) {
        std::vector<std::vector<unsigned>> types;
        std::vector<unsigned> cur;
        detail::partitions(total, 1, cur, 3, types);
        for (const auto& q : types) report.rows.push_back(scan_multipartite(q, scan_cap));
      }
      break;
    case Question::Hypersimplex:
      for (unsigned n = std::max(4U, range.lo); n <= range.hi; ++n)
        for (unsigned k = 0; k + 2 <= n / 2; ++k)
          report.rows.push_back(detail::evaluate_row(Hypersimplex{n / 2 - k, n}, {Integer(k + 2)}, scan_cap));
      break;
  }
  return report;
}

}  // namespace ehrmagic
