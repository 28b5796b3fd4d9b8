#include <gtest/gtest.h>

#include "gsptri/gsptri.hpp"

using gsptri::Fraction;
using gsptri::LaurentPoly;
using gsptri::Rational;

namespace {

LaurentPoly random_poly(gsptri::SplitMix64& rng, std::size_t nvars, int terms = 3) {
  LaurentPoly p(nvars);
  for (int i = 0; i < terms; ++i) {
    gsptri::Exponent e(nvars);
    for (auto& x : e) x = static_cast<int>(rng.uniform(-2, 2));
    p += LaurentPoly::monomial(e, rng.nonzero_rational());
  }
  return p;
}

LaurentPoly t(std::size_t nvars, std::size_t i, int k = 1) { return LaurentPoly::variable(nvars, i, k); }

}  // namespace

TEST(Laurent, NoZeroTermsAndStructuralEquality) {
  const auto a = t(2, 0) + t(2, 1);
  const auto b = t(2, 1) + t(2, 0);
  EXPECT_EQ(a, b);
  const auto z = a - b;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.term_count(), 0u);
  EXPECT_EQ((t(1, 0) * t(1, 0, -1)), LaurentPoly::constant(1, Rational(1)));
}

TEST(Laurent, RingAxiomsOnSeededSamples) {
  gsptri::SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(Laurent, EvaluationIsAHomomorphism) {
  gsptri::SplitMix64 rng(12);
  const std::vector<Rational> pt{Rational(3, 2), Rational(-5)};
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST(Laurent, ExactDivision) {
  gsptri::SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  const LaurentPoly one = LaurentPoly::constant(1, Rational(1));
  EXPECT_FALSE(one.divide_exact(one + t(1, 0)).has_value());
  EXPECT_EQ(*(t(1, 0, 2) - one).divide_exact(t(1, 0) - one), t(1, 0) + one);
}

TEST(Laurent, InverseOnlyForMonomials) {
  EXPECT_EQ(LaurentPoly::monomial({2, -1}, Rational(3)).inverse(), LaurentPoly::monomial({-2, 1}, Rational(1, 3)));
  EXPECT_THROW((t(1, 0) + LaurentPoly(1)).inverse(), gsptri::ArgumentError);
}

TEST(Laurent, ConstantsPromoteInMixedArithmetic) {
  const LaurentPoly c(Rational(2));
  const auto p = t(2, 1) * c + c;
  EXPECT_EQ(p.nvars(), 2u);
  EXPECT_EQ(p.constant_term(), Rational(2));
}

TEST(Fraction, MonomialDenominatorsCancel) {
  const Fraction f(t(1, 0) + LaurentPoly::constant(1, Rational(1)), t(1, 0, 3));
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.as_laurent(), t(1, 0, -2) + t(1, 0, -3));
}

TEST(Fraction, ExactQuotientsBecomeLaurent) {
  const LaurentPoly one = LaurentPoly::constant(1, Rational(1));
  const Fraction f(t(1, 0, 2) - one, t(1, 0) + one);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.as_laurent(), t(1, 0) - one);
  const Fraction g(one, t(1, 0) + one);
  EXPECT_FALSE(g.is_laurent());
}

TEST(Fraction, FieldArithmeticMatchesEvaluation) {
  gsptri::SplitMix64 rng(14);
  const std::vector<Rational> pt{Rational(7, 3), Rational(-2, 5)};
  auto value = [&](const Fraction& f) { return f.num().evaluate(pt) / f.den().evaluate(pt); };
  for (int trial = 0; trial < 40; ++trial) {
    const Fraction a(random_poly(rng, 2), random_poly(rng, 2, 2));
    const Fraction b(random_poly(rng, 2), random_poly(rng, 2, 2));
    if (a.den().evaluate(pt).is_zero() || b.den().evaluate(pt).is_zero() || b.is_zero()) continue;
    if (b.num().evaluate(pt).is_zero()) continue;
    EXPECT_EQ(value(a + b), value(a) + value(b));
    EXPECT_EQ(value(a * b), value(a) * value(b));
    EXPECT_EQ(value(a / b), value(a) / value(b));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * b.inverse() * b, a);
  }
}
