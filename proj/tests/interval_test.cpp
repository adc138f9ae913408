#include "trigsum/interval.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace trigsum {
namespace {

constexpr mpfr_prec_t kPrec = 128;

bool contains(const Interval& x, const Rational& v) {
  return mpfr_cmp_q(x.lower().get(), v.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(x.upper().get(), v.get_mpq_t()) >= 0;
}

bool is_point(const Interval& x) { return mpfr_equal_p(x.lower().get(), x.upper().get()); }

TEST(Interval, RationalEnclosure) {
  const Interval third = Interval::from_rational(Rational(1, 3), kPrec);
  EXPECT_TRUE(contains(third, Rational(1, 3)));
  EXPECT_FALSE(is_point(third));
  EXPECT_TRUE(is_point(Interval::from_rational(Rational(9, 8), kPrec)));
}

TEST(Interval, ExactSpecialAngles) {
  EXPECT_TRUE(is_point(Interval::cos_pi(0, 5, kPrec)));
  EXPECT_TRUE(contains(Interval::cos_pi(0, 5, kPrec), 1));
  EXPECT_TRUE(is_point(Interval::cos_pi(1, 2, kPrec)));
  EXPECT_TRUE(contains(Interval::cos_pi(1, 2, kPrec), 0));
  EXPECT_TRUE(contains(Interval::cos_pi(2, 3, kPrec), Rational(-1, 2)));
  EXPECT_TRUE(is_point(Interval::cos_pi(2, 3, kPrec)));
  EXPECT_TRUE(contains(Interval::cos_pi(7, 1, kPrec), -1));
  EXPECT_TRUE(contains(Interval::sin_pi(3, 2, kPrec), -1));
  EXPECT_TRUE(is_point(Interval::sin_pi(4, 4, kPrec)));
}

TEST(Interval, TrigAgreesWithDoubleOnAGrid) {
  for (int den = 1; den <= 24; ++den) {
    for (int num = -3 * den; num <= 3 * den; ++num) {
      const double x = M_PI * num / den;
      const Interval c = Interval::cos_pi(num, den, kPrec);
      const Interval s = Interval::sin_pi(num, den, kPrec);
      EXPECT_NEAR(c.lower().to_double(), std::cos(x), 1e-12) << num << "/" << den;
      EXPECT_NEAR(s.upper().to_double(), std::sin(x), 1e-12) << num << "/" << den;
      EXPECT_LT(c.width().to_double(), 1e-35);
    }
  }
}

TEST(Interval, CotOfMultipleOfPiThrows) {
  EXPECT_THROW(Interval::cot_pi(3, 3, kPrec), DomainError);
  EXPECT_TRUE(contains(Interval::cot_pi(1, 4, kPrec), 1));
}

TEST(Interval, PowersRespectSignStructure) {
  const Interval third = Interval::from_rational(Rational(1, 3), kPrec);
  const Interval across = third - third;  // straddles zero
  ASSERT_TRUE(across.contains_zero());
  EXPECT_EQ(mpfr_sgn(across.pow(2).lower().get()), 0);
  EXPECT_LT(mpfr_sgn(across.pow(3).lower().get()), 0);

  const Interval neg = Interval::from_rational(Rational(-1, 2), kPrec);
  EXPECT_TRUE(contains(neg.pow(3), Rational(-1, 8)));
  EXPECT_TRUE(contains(neg.pow(4), Rational(1, 16)));
  EXPECT_TRUE(contains(neg.pow(0), 1));
}

TEST(Interval, ArithmeticEnclosesExactResults) {
  const Interval a = Interval::from_rational(Rational(1, 3), kPrec);
  const Interval b = Interval::from_rational(Rational(-2, 7), kPrec);
  EXPECT_TRUE(contains(a + b, Rational(1, 3) + Rational(-2, 7)));
  EXPECT_TRUE(contains(a - b, Rational(1, 3) - Rational(-2, 7)));
  EXPECT_TRUE(contains(a * b, Rational(1, 3) * Rational(-2, 7)));
  EXPECT_TRUE(contains(a / b, Rational(1, 3) / Rational(-2, 7)));
  EXPECT_TRUE(contains(a.scaled(Rational(3, 5)), Rational(1, 5)));
  EXPECT_THROW(a / (b - b), DomainError);
}

TEST(Interval, WidthShrinksWithPrecision) {
  const double w1 = Interval::cos_pi(1, 7, 80).width().to_double();
  const double w2 = Interval::cos_pi(1, 7, 160).width().to_double();
  EXPECT_GT(w1, 0);
  EXPECT_LT(w2, w1 * 1e-20);
}

}  // namespace
}  // namespace trigsum
