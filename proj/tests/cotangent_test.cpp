#include "trigsum/cotangent.hpp"

#include <gtest/gtest.h>

#include "trigsum/oracle.hpp"

namespace trigsum {
namespace {

Rational cot_truth(std::uint32_t n, std::uint32_t k) {
  return oracle::exact_value(CotSumParams{n, k});
}

Rational byrne_smith_truth(std::uint32_t n, std::uint32_t k) {
  return oracle::exact_value(oracle::ByrneSmithParams{n, k});
}

// (1/d)(k-1)(k-2) * inner(k)
Rational factored(const Rational& k, const RationalPolynomial& inner, const Integer& d) {
  return (k - 1) * (k - 2) * evaluate(inner, k) / Rational(d);
}

TEST(CotPowerSum, Examples) {
  EXPECT_EQ(cot_power_sum(2, 3), Rational(2, 9));
  EXPECT_EQ(cot_power_sum(3, 4), 2);
  EXPECT_EQ(cot_power_sum(1, 5), 4);
}

TEST(CotPowerSum, SquaresFollowKnownQuadratic) {
  for (std::uint32_t k = 2; k <= 30; ++k) {
    EXPECT_EQ(cot_power_sum(1, k), Rational((k - 1) * (k - 2)) / 3) << k;
  }
}

TEST(CotPowerSum, PublishedPolynomials) {
  const RationalPolynomial quartic{-13, 3, 1};
  const RationalPolynomial sextic{251, -96, -28, 6, 2};
  const RationalPolynomial octic{-3551, 1761, 457, -195, -59, 9, 3};
  for (std::uint32_t k = 2; k <= 40; ++k) {
    EXPECT_EQ(cot_power_sum(2, k), factored(k, quartic, 45)) << k;
    EXPECT_EQ(cot_power_sum(3, k), factored(k, sextic, 945)) << k;
    EXPECT_EQ(cot_power_sum(4, k), factored(k, octic, 14175)) << k;
  }
}

TEST(CotPowerSum, MatchesOracle) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t k = 2; k <= 14; ++k) {
      EXPECT_EQ(cot_power_sum(n, k), cot_truth(n, k)) << n << " " << k;
    }
  }
}

TEST(CotPowerSum, DistinguishedSlotIsIrrelevant) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t k = 2; k <= 8; ++k) {
      const Rational reference = cot_power_sum(n, k);
      for (std::size_t slot = 0; slot <= 2 * n; ++slot) {
        EXPECT_EQ(cot_power_sum(n, k, slot), reference) << n << " " << k << " slot " << slot;
      }
    }
  }
}

TEST(CotPowerSum, RejectsBadArguments) {
  EXPECT_THROW(cot_power_sum(0, 3), DomainError);
  EXPECT_THROW(cot_power_sum(2, 1), DomainError);
  EXPECT_THROW(cot_power_sum(2, 5, 5), DomainError);
}

TEST(CotPowerSum, PositiveIndexReadingCollapses) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::uint32_t k = 2; k <= 8; ++k) {
      const Rational literal = cot_power_sum_positive_indices(n, k);
      EXPECT_EQ(literal, Rational(n % 2 == 0 ? k : -static_cast<long>(k)));
      EXPECT_NE(literal, cot_truth(n, k));
    }
  }
}

TEST(CotPolynomial, QuarticCoefficients) {
  const CotPolynomial p = cot_sum_polynomial(2);
  const RationalPolynomial expected{Rational(-26, 45), 1, Rational(-4, 9), 0, Rational(1, 45)};
  EXPECT_EQ(p.coefficients, expected);
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p.common_denominator(), 45);
}

TEST(CotPolynomial, DenominatorsOfHigherPowers) {
  EXPECT_EQ(cot_sum_polynomial(3).common_denominator(), 945);
  EXPECT_EQ(cot_sum_polynomial(4).common_denominator(), 14175);
}

TEST(CotPolynomial, ExtrapolatesBeyondFitPoints) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const CotPolynomial p = cot_sum_polynomial(n);
    EXPECT_EQ(p.degree(), 2 * n);
    for (std::uint32_t k = 2 * n + 7; k <= 2 * n + 12; ++k) EXPECT_EQ(p(k), cot_power_sum(n, k));
  }
}

TEST(ByrneSmith, Examples) {
  EXPECT_EQ(byrne_smith_sum(1, 2), 6);
  EXPECT_EQ(byrne_smith_sum(1, 3), 15);
  EXPECT_EQ(byrne_smith_sum(3, 2), 198);
  EXPECT_EQ(byrne_smith_sum(1, 1), 1);
}

TEST(ByrneSmith, CoefficientExamples) {
  const auto b = byrne_smith_coefficients(2);
  EXPECT_EQ(b.at(1, 1), 2);
  EXPECT_EQ(b.at(2, 1), Rational(-8, 3));
  EXPECT_EQ(b.at(2, 2), Rational(8, 3));
}

TEST(ByrneSmith, RowSumConstraint) {
  const auto b = byrne_smith_coefficients(12);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(b.row_sum(n), n % 2 == 1 ? 2 : 0) << n;
  }
}

TEST(ByrneSmith, CoefficientsMatchPolynomialFitOfOracle) {
  // Fit c_0 + c_1 k + ... + c_{2n} k^{2n} through oracle values at k = 1..2n+1
  // and compare with the table: odd powers above 1 and the constant vanish.
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::vector<Rational> xs, ys;
    for (std::uint32_t k = 1; k <= 2 * n + 1; ++k) {
      xs.emplace_back(k);
      ys.push_back(byrne_smith_truth(n, k));
    }
    RationalPolynomial fit = interpolate(xs, ys);
    fit.resize(2 * n + 1);
    const auto b = byrne_smith_coefficients(n);
    EXPECT_EQ(fit[0], 0);
    EXPECT_EQ(fit[1], n % 2 == 0 ? 1 : -1);
    for (std::uint32_t j = 1; j <= n; ++j) {
      EXPECT_EQ(fit[2 * j], b.at(n, j)) << n << " " << j;
      if (j < n) EXPECT_EQ(fit[2 * j + 1], 0);
    }
  }
}

TEST(ByrneSmith, MatchesOracle) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t k = 1; k <= 12; ++k) {
      EXPECT_EQ(byrne_smith_sum(n, k), byrne_smith_truth(n, k)) << n << " " << k;
    }
  }
}

TEST(ByrneSmith, TranscribedFormFails) {
  EXPECT_EQ(byrne_smith_sum_transcribed(1, 2), 10);
  EXPECT_NE(byrne_smith_sum_transcribed(1, 2), byrne_smith_truth(1, 2));
  const auto t = byrne_smith_coefficients_transcribed(3);
  const auto b = byrne_smith_coefficients(3);
  EXPECT_NE(t.at(2, 1), b.at(2, 1));
}

}  // namespace
}  // namespace trigsum
