#include <ehrmagic/parse.hpp>
#include <ehrmagic/polynomial.hpp>
#include <ehrmagic/sturm.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ehrmagic;
using namespace ehrmagic::testing;

namespace {

const Polynomial x = Polynomial::x();
const Polynomial one = Polynomial::constant(1);

TEST(PolynomialTest, CanonicalFormDropsTrailingZeros) {
  Polynomial p(ints({1, 2, 0, 0}));
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(*p.degree(), 1u);
  EXPECT_FALSE(Polynomial(ints({0, 0})).degree().has_value());
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_THROW(Polynomial().degree_or_throw(), ZeroPolynomial);
  EXPECT_THROW(Polynomial().leading(), ZeroPolynomial);
}

TEST(PolynomialTest, Add) {
  EXPECT_EQ(add(x + one, x - one), Polynomial(ints({0, 2})));
  Polynomial p(ints({3, -1, 4}));
  EXPECT_EQ(add(p, Polynomial()), p);
  Polynomial s = add(x * x, Polynomial(ints({0, 1, -1})));
  EXPECT_EQ(s, x);
  EXPECT_EQ(*s.degree(), 1u);
}

TEST(PolynomialTest, Mul) {
  EXPECT_EQ(mul(x + one, x + one), Polynomial(ints({1, 2, 1})));
  Polynomial p(ints({3, -1, 4}));
  EXPECT_EQ(mul(p, one), p);
  Polynomial half = x + Polynomial::constant(Rational(1, 2));
  EXPECT_EQ(half * half + one, Polynomial({Rational(5, 4), 1, 1}));
  EXPECT_TRUE(mul(p, Polynomial()).is_zero());
}

TEST(PolynomialTest, ScaleArg) {
  EXPECT_EQ(scale_arg(Polynomial(ints({1, 1, 1})), 2), Polynomial(ints({1, 2, 4})));
  Polynomial p(ints({3, -1, 4}));
  EXPECT_EQ(scale_arg(p, 1), p);
  EXPECT_EQ(scale_arg(binomial_poly(2, 2), 2), Polynomial(ints({1, 3, 2})));
}

TEST(PolynomialTest, Eval) {
  EXPECT_EQ(eval(binomial_poly(3, 3), 1), 4);
  EXPECT_EQ(eval(Polynomial(ints({7, 5, 3})), 0), 7);
  EXPECT_EQ(eval(Polynomial(ints({1, 2})), Rational(-1, 2)), 0);
  EXPECT_EQ(eval(Polynomial(), 5), 0);
}

TEST(PolynomialTest, BinomialPoly) {
  EXPECT_EQ(binomial_poly(2, 2), Polynomial({1, Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(binomial_poly(0, 1), x);
  for (unsigned d = 0; d <= 8; ++d) {
    EXPECT_EQ(eval(binomial_poly(d, d), 0), 1);
    EXPECT_EQ(binomial_poly(0, d).leading(), Rational(1) / Rational(factorial(d)));
  }
  EXPECT_EQ(binomial_poly(Rational(2), 2, 2), Polynomial(ints({1, 3, 2})));
}

TEST(PolynomialTest, Derivative) {
  EXPECT_EQ(derivative(Polynomial(ints({1, 1, 1}))), Polynomial(ints({1, 2})));
  EXPECT_TRUE(derivative(Polynomial::constant(9)).is_zero());
  EXPECT_EQ(eval(derivative(pow(x, 3)), 1), 3);
}

TEST(PolynomialTest, DivmodAndGcd) {
  Polynomial a = (x + one) * (x - Polynomial::constant(2)) * (x + Polynomial::constant(3));
  Polynomial b = (x + one) * (x + Polynomial::constant(5));
  auto [quot, rem] = divmod(a, b);
  EXPECT_EQ(quot * b + rem, a);
  EXPECT_LT(rem.degree().value_or(0), *b.degree());
  EXPECT_EQ(gcd(a, b), x + one);
  EXPECT_THROW(divmod(a, Polynomial()), ZeroPolynomial);
}

TEST(PolynomialTest, ToString) {
  EXPECT_EQ(to_string(binomial_poly(2, 2)), "1/2*x^2 + 3/2*x + 1");
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(Polynomial(ints({0, -1}))), "-x");
  EXPECT_EQ(to_string(Polynomial(ints({-2, 0, 1}))), "x^2 - 2");
}

TEST(PolynomialProperties, RingAxioms) {
  Rng rng(1001);
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial p = random_poly(rng, uniform(rng, 0, 10), 100);
    Polynomial q = random_poly(rng, uniform(rng, 0, 10), 100);
    Polynomial r = random_poly(rng, uniform(rng, 0, 10), 100);
    ASSERT_EQ(add(p, q), add(q, p));
    ASSERT_EQ(mul(p, q), mul(q, p));
    ASSERT_EQ(add(add(p, q), r), add(p, add(q, r)));
    ASSERT_EQ(mul(mul(p, q), r), mul(p, mul(q, r)));
    ASSERT_EQ(mul(p, add(q, r)), add(mul(p, q), mul(p, r)));
    Rational t = random_rational(rng, -50, 50, 7);
    ASSERT_EQ(eval(mul(p, q), t), eval(p, t) * eval(q, t));
  }
}

TEST(PolynomialProperties, ScaleArgComposes) {
  Rng rng(1002);
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial p = random_poly(rng, uniform(rng, 0, 10), 100, 5);
    Rational k = random_nonzero_rational(rng, 20, 9);
    Rational k2 = random_nonzero_rational(rng, 20, 9);
    ASSERT_EQ(scale_arg(scale_arg(p, k), k2), scale_arg(p, k * k2));
    ASSERT_EQ(*scale_arg(p, k).degree(), *p.degree());
  }
}

TEST(PolynomialProperties, BinomialPolyMatchesIntegerBinomial) {
  for (long shift = -3; shift <= 6; ++shift) {
    for (unsigned d = 0; d <= 8; ++d) {
      Polynomial b = binomial_poly(shift, d);
      for (long m = static_cast<long>(d) - shift; m <= static_cast<long>(d) - shift + 12; ++m) {
        // product (m+shift)(m+shift-1).../d!, computed with integers only
        Integer num = 1;
        for (unsigned j = 0; j < d; ++j) num *= m + shift - static_cast<long>(j);
        Integer expected = num / factorial(d);
        ASSERT_EQ(eval(b, m), Rational(expected)) << "shift=" << shift << " d=" << d << " m=" << m;
      }
    }
  }
}

TEST(RationalTest, ParseAndRound) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil(Rational(37, 2)), 19);
  EXPECT_EQ(binomial(10, 3), 120);
}

TEST(ParseTest, Expressions) {
  EXPECT_EQ(parse_polynomial("binom(x+2,2)"), binomial_poly(2, 2));
  EXPECT_EQ(parse_polynomial("x^2 + x + 5/4"), Polynomial({Rational(5, 4), 1, 1}));
  EXPECT_EQ(parse_polynomial("(2x+1)*(x^2+x+1/2)"),
            Polynomial(ints({1, 2})) * Polynomial({Rational(1, 2), 1, 1}));
  EXPECT_EQ(parse_polynomial(" - x ^ 3 "), Polynomial(ints({0, 0, 0, -1})));
  EXPECT_EQ(parse_polynomial("1"), one);
  EXPECT_EQ(parse_polynomial("2 binom(2x+1, 3)"), 2 * binomial_of(Polynomial(ints({1, 2})), 3));
}

TEST(ParseTest, ErrorsCarryPosition) {
  try {
    parse_polynomial("x + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
  EXPECT_THROW(parse_polynomial("x/(x+1)"), ParseError);
  EXPECT_THROW(parse_polynomial("(x+1"), ParseError);
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("y"), ParseError);
  EXPECT_THROW(parse_polynomial("x^99999"), ParseError);
}

TEST(SturmTest, CountsAndIsolation) {
  Polynomial p = (x - Polynomial::constant(1)) * (x + Polynomial::constant(2)) * (x * x - Polynomial::constant(2));
  EXPECT_EQ(sturm::count_real_roots(p), 4u);
  EXPECT_EQ(sturm::count_real_roots(x * x + one), 0u);
  auto roots = sturm::isolate_roots(p, -10, 10, Rational(1, 1024));
  ASSERT_EQ(roots.size(), 4u);
  for (const auto& iv : roots) EXPECT_LE(iv.hi - iv.lo, Rational(1, 1024));
  auto sq = sturm::squarefree_decomposition(pow(x - one, 3) * (x + one));
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq[0], x + one);
  EXPECT_EQ(sq[2], x - one);
}

}  // namespace
