#include <ehrmagic/families.hpp>
#include <ehrmagic/magic_basis.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ehrmagic;
using namespace ehrmagic::testing;

namespace {

const Polynomial x = Polynomial::x();
const Polynomial x1 = Polynomial(ints({1, 1}));

std::vector<Rational> magic(const Polynomial& f, const Rational& k) { return to_magic(f, k).coeffs; }

TEST(ToMagic, KnownExpansions) {
  EXPECT_EQ(magic(binomial_poly(2, 2), 1), (std::vector<Rational>{1, Rational(-1, 2), 0}));
  EXPECT_EQ(magic(binomial_poly(2, 2), 2), ints({1, 1, 0}));
  // sympy linear-solve oracle
  EXPECT_EQ(magic(ehrhart(MinimalMatroid{2, 4}), 1), (std::vector<Rational>{1, Rational(-5, 6), Rational(1, 6), 0}));
  for (unsigned d = 0; d <= 6; ++d) {
    auto e = magic(pow(x1, d), 1);
    ASSERT_EQ(e.size(), d + 1);
    EXPECT_EQ(e[0], 1);
    for (unsigned i = 1; i <= d; ++i) EXPECT_EQ(e[i], 0);
  }
  EXPECT_EQ(magic(ehrhart(SpikedSimplex{1, 4}), 2),
            (std::vector<Rational>{1, Rational(1, 6), Rational(8, 3), Rational(-13, 2), 6}));
}

TEST(ToMagic, Errors) {
  EXPECT_THROW(to_magic(Polynomial(), 1), ZeroPolynomial);
  EXPECT_THROW(to_magic(x1, 0), ZeroDilation);
  EXPECT_THROW(is_magic_positive(Polynomial()), ZeroPolynomial);
}

TEST(FromMagic, KnownExpansions) {
  EXPECT_EQ(from_magic({2, ints({1, 1, 0})}), Polynomial(ints({1, 3, 2})));
  for (std::size_t d = 0; d <= 5; ++d) {
    std::vector<Rational> last(d + 1, 0), first(d + 1, 0);
    last[d] = 1;
    first[0] = 1;
    EXPECT_EQ(from_magic({d, last}), pow(x, d));
    EXPECT_EQ(from_magic({d, first}), pow(x1, d));
  }
}

TEST(IsMagicPositive, Examples) {
  EXPECT_FALSE(is_magic_positive(binomial_poly(2, 2)));
  EXPECT_TRUE(is_magic_positive(Polynomial(ints({1, 3, 2}))));
  EXPECT_TRUE(is_magic_positive(pow(x1, 3)));
  EXPECT_TRUE(is_magic_positive(Polynomial::constant(3)));
}

TEST(ThresholdPolys, Examples) {
  ThresholdPolynomials t = threshold_polys(binomial_poly(2, 2));
  ASSERT_EQ(t.g.size(), 3u);
  EXPECT_EQ(t.g[0], Polynomial::constant(1));
  EXPECT_EQ(t.g[1], Polynomial({-2, Rational(3, 2)}));  // ((a-b+3)k - 4)/2 with a = b = 0
  Polynomial f = binomial_poly(2, 2);
  for (long k = -3; k <= 3; ++k) EXPECT_EQ(eval(t.g[2], k), eval(f, -k));
}

TEST(SearchBound, Examples) {
  EXPECT_EQ(search_bound(x1), 2);
  EXPECT_TRUE(is_magic_positive_at(x1, 2));
  for (unsigned d = 1; d <= 5; ++d) {
    EXPECT_GE(search_bound(pow(x1, d)), 1);
    EXPECT_TRUE(is_magic_positive(pow(x1, d)));
  }
  Polynomial f(ints({2, 3, 1}));
  Integer K = search_bound(f);
  EXPECT_GE(K, 2);
  EXPECT_LE(*m_index(f).value, K);
  EXPECT_THROW(search_bound(Polynomial(ints({1, 0, 1}))), NonPositiveCoefficients);
  EXPECT_THROW(search_bound(Polynomial(ints({1, -1, 1}))), NonPositiveCoefficients);
}

TEST(MIndex, Examples) {
  for (unsigned d = 1; d <= 20; ++d) {
    MIndexResult r = m_index(ehrhart(StandardSimplex{d}));
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, d);
    EXPECT_TRUE(r.monotone_search);
  }
  EXPECT_EQ(*m_index(ehrhart(CrossPolytope{4})).value, 4);
  EXPECT_EQ(*m_index(ehrhart(StandardReflexiveSimplex{4})).value, 10);
  EXPECT_EQ(*m_index(pow(x1, 5)).value, 1);
}

TEST(MIndex, LinearScanFallback) {
  // x^2 + 3x: zero constant term, so no monotone search; g_2(k) = k^2 - 3k.
  MIndexResult r = m_index(Polynomial(ints({0, 3, 1})));
  EXPECT_FALSE(r.monotone_search);
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 3);
  // a_0 = f(0) = -1 for every k.
  MIndexResult none = m_index(Polynomial(ints({-1, 0, 1})), 50);
  EXPECT_FALSE(none.value);
  EXPECT_EQ(none.search_bound_used, 50);
}

TEST(MagicThreshold, Examples) {
  const Rational tol(1, 1 << 20);
  // a_1 = (3k - 4)/2 turns nonnegative at 4/3, but a_2 = (k - 1)(k - 2)/2 is
  // negative on (1, 2), so the real threshold is 2.
  auto [lo, hi] = magic_threshold(binomial_poly(2, 2), tol);
  EXPECT_LE(hi - lo, tol);
  EXPECT_LE(lo, 2);
  EXPECT_GE(hi, 2);
  EXPECT_EQ(to_magic(binomial_poly(2, 2), Rational(4, 3)).coeffs[1], 0);
  EXPECT_LT(to_magic(binomial_poly(2, 2), Rational(4, 3)).coeffs[2], 0);
  auto [lo2, hi2] = magic_threshold(Polynomial({Rational(5, 4), 1, 1}), tol);
  EXPECT_LE(lo2, Rational(5, 2));
  EXPECT_GE(hi2, Rational(5, 2));
  // (kx + 1)^2 has a_1 = 2(k - 1)
  auto [lo3, hi3] = magic_threshold(pow(x1, 2), tol);
  EXPECT_LE(lo3, 1);
  EXPECT_GE(hi3, 1);
  EXPECT_THROW(magic_threshold(x1, 0), InvalidParameters);
  EXPECT_THROW(magic_threshold(Polynomial(ints({1, 0, 1})), tol), NonPositiveCoefficients);
}

TEST(MagicProperties, RoundTripAndBoundaryValues) {
  Rng rng(2001);
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial f = random_poly(rng, uniform(rng, 0, 8), 60, 9);
    Rational k = random_nonzero_rational(rng, 12, 7);
    MagicExpansion e = to_magic(f, k);
    ASSERT_EQ(from_magic(e), scale_arg(f, k));
    MagicExpansion e1 = to_magic(f, 1);
    const std::size_t d = e1.d;
    ASSERT_EQ(e1.coeffs[0], eval(f, 0));
    ASSERT_EQ((d % 2 == 0 ? e1.coeffs[d] : Rational(-e1.coeffs[d])), eval(f, -1));
    ThresholdPolynomials t = threshold_polys(f);
    for (std::size_t i = 0; i <= d; ++i) ASSERT_EQ(eval(t.g[i], k), e.coeffs[i]);
  }
}

TEST(MagicProperties, Linearity) {
  Rng rng(2002);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = uniform(rng, 0, 8);
    Polynomial f = random_poly(rng, d, 40, 5);
    Polynomial g = random_poly(rng, d, 40, 5);
    if ((f + g).degree() != d) continue;
    Rational k = random_nonzero_rational(rng, 10, 5);
    auto a = magic(f, k), b = magic(g, k), s = magic(f + g, k);
    for (std::size_t i = 0; i <= d; ++i) ASSERT_EQ(s[i], a[i] + b[i]);
  }
}

TEST(MagicProperties, MonotoneInDilation) {
  Rng rng(2003);
  int exercised = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial f = random_positive_poly(rng, uniform(rng, 1, 8), 30, 4);
    for (long k = 1; k <= 20; ++k) {
      if (!is_magic_positive_at(f, k)) continue;
      ++exercised;
      for (long j = 1; j <= 5; ++j) ASSERT_TRUE(is_magic_positive_at(f, k + j)) << f << " k=" << k;
      for (int r = 0; r < 3; ++r) {
        Rational kp = Rational(k) + random_rational(rng, 1, 100, 37);
        ASSERT_TRUE(is_magic_positive_at(f, kp)) << f << " k'=" << kp;
      }
      break;
    }
  }
  EXPECT_GT(exercised, 100);
}

TEST(MagicProperties, ProductClosureAndConvolution) {
  Rng rng(2004);
  int checked = 0;
  while (checked < 200) {
    Polynomial f = random_positive_poly(rng, uniform(rng, 1, 5), 20, 3);
    Polynomial g = random_positive_poly(rng, uniform(rng, 1, 5), 20, 3);
    // dilate until magic positive so both factors qualify
    f = scale_arg(f, Rational(*m_index(f).value));
    g = scale_arg(g, Rational(*m_index(g).value));
    ASSERT_TRUE(is_magic_positive(f));
    ASSERT_TRUE(is_magic_positive(g));
    Polynomial fg = mul(f, g);
    ASSERT_TRUE(is_magic_positive(fg));
    auto a = magic(f, 1), b = magic(g, 1), c = magic(fg, 1);
    std::vector<Rational> conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    ASSERT_EQ(conv, c);
    ++checked;
  }
}

TEST(MagicProperties, MIndexAgreesWithLinearScan) {
  std::vector<FamilySpec> specs;
  for (unsigned d = 1; d <= 8; ++d) {
    specs.push_back(StandardSimplex{d});
    specs.push_back(CrossPolytope{d});
    specs.push_back(StandardReflexiveSimplex{d});
  }
  for (unsigned n = 4; n <= 8; ++n) specs.push_back(MinimalMatroid{2, n});
  specs.push_back(CompleteMultipartite{{1, 2, 3}});
  for (const auto& spec : specs) {
    Polynomial f = ehrhart(spec);
    MIndexResult r = m_index(f);
    ASSERT_TRUE(r.value);
    long m = r.value->get_si();
    for (long k = 1; k < m; ++k) ASSERT_FALSE(is_magic_positive_at(f, k)) << describe(spec) << " k=" << k;
    ASSERT_TRUE(is_magic_positive_at(f, m)) << describe(spec);
  }
}

}  // namespace
