#include "trigsum/closed_forms.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "trigsum/oracle.hpp"

namespace trigsum {
namespace {

Rational truth(const SumSpec& spec) { return oracle::exact_value(spec); }

SumSpec spec(SumFamily f, std::uint32_t m, std::uint32_t n, std::uint32_t q = 1,
             TrigKind kind = TrigKind::Cos) {
  return SumSpec{f, kind, m, n, q};
}

TEST(CosPowerSum, Examples) {
  EXPECT_EQ(cos_power_sum(0, 7), 7);
  EXPECT_EQ(cos_power_sum(2, 3), Rational(9, 8));
  EXPECT_EQ(cos_power_sum(3, 2), 1);
}

TEST(SinPowerSum, Examples) {
  EXPECT_EQ(sin_power_sum(5, 1), 0);
  EXPECT_EQ(sin_power_sum(2, 2), 1);
  EXPECT_EQ(sin_power_sum(1, 2), 1);
  EXPECT_EQ(sin_power_sum(0, 4), 4);
}

TEST(BaseSums, AgreeWithRootOfUnityExpansion) {
  for (std::uint32_t n = 1; n <= 20; ++n) {
    for (std::uint32_t m = 0; m <= 30; ++m) {
      ASSERT_EQ(cos_power_sum(m, n), oracle::root_of_unity_power_sum(TrigKind::Cos, 2 * m, n))
          << m << " " << n;
      ASSERT_EQ(sin_power_sum(m, n), oracle::root_of_unity_power_sum(TrigKind::Sin, 2 * m, n))
          << m << " " << n;
    }
  }
}

TEST(BaseSums, BelowThresholdEqualsCentralBinomialTerm) {
  // With m < n the binomial window is empty: n C(2m, m) / 4^m.
  for (std::uint32_t n = 2; n <= 12; ++n) {
    for (std::uint32_t m = 1; m < n; ++m) {
      const Rational expected = make_rational(n * binom(2 * m, m), pow2(2 * m));
      EXPECT_EQ(cos_power_sum(m, n), expected);
      EXPECT_EQ(sin_power_sum(m, n), expected);
    }
  }
}

TEST(BaseSums, ZeroDenominatorRejected) {
  EXPECT_THROW(cos_power_sum(1, 0), DomainError);
  EXPECT_THROW(sin_power_sum(1, 0), DomainError);
}

TEST(ScaledSum, Examples) {
  EXPECT_EQ(scaled_sum(TrigKind::Cos, 1, 3, 6), 3);
  EXPECT_EQ(scaled_sum(TrigKind::Sin, 0, 2, 4), 4);
  EXPECT_EQ(scaled_sum(TrigKind::Cos, 2, 2, 2), 1);
  EXPECT_THROW(scaled_sum(TrigKind::Cos, 1, 3, 4), DomainError);
}

TEST(CoprimeSum, Examples) {
  EXPECT_EQ(coprime_sum(TrigKind::Cos, 2, 5, 2), Rational(15, 8));
  EXPECT_EQ(coprime_sum(TrigKind::Cos, 2, 5, 3), Rational(15, 8));
  EXPECT_EQ(coprime_sum(TrigKind::Sin, 1, 3, 2), Rational(3, 2));
  EXPECT_THROW(coprime_sum(TrigKind::Cos, 1, 4, 2), DomainError);
}

TEST(GcdReducedSum, Examples) {
  EXPECT_EQ(gcd_reduced_sum(TrigKind::Cos, 1, 4, 2), 2);
  EXPECT_EQ(gcd_reduced_sum(TrigKind::Cos, 2, 4, 4), 4);
  EXPECT_EQ(gcd_reduced_sum(TrigKind::Sin, 1, 6, 2), 3);
}

TEST(GcdReducedSum, ReducesToCoprimeWhenGcdIsOne) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (std::uint32_t q = 1; q <= 2 * n + 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      for (std::uint32_t m = 0; m <= 8; ++m) {
        EXPECT_EQ(gcd_reduced_sum(TrigKind::Sin, m, n, q), sin_power_sum(m, n));
      }
    }
  }
}

TEST(QuoniamSum, Examples) {
  EXPECT_EQ(quoniam_sum(2, 4), 7);
  EXPECT_EQ(quoniam_sum(1, 2), 1);
  EXPECT_EQ(quoniam_sum(1, 3), 2);
  EXPECT_THROW(quoniam_sum(0, 3), DomainError);
  EXPECT_THROW(quoniam_sum(5, 4), DomainError);
}

TEST(MercaHalf, Examples) {
  EXPECT_EQ(merca_half_sum(1, 2), 0);
  EXPECT_EQ(merca_half_sum(2, 5), Rational(7, 16));
  EXPECT_EQ(merca_half_sum(3, 3), Rational(1, 64));
}

TEST(MercaHalf, WindowFormAgrees) {
  for (std::uint32_t n = 1; n <= 15; ++n) {
    for (std::uint32_t p = 1; p <= 30; ++p) {
      EXPECT_EQ(merca_half_sum(p, n), merca_half_sum_window(p, n)) << p << " " << n;
    }
  }
}

TEST(MercaHalf, MatchesOracle) {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (std::uint32_t p = 1; p <= 12; ++p) {
      EXPECT_EQ(merca_half_sum(p, n), truth(spec(SumFamily::MercaHalf, p, n)));
    }
  }
}

TEST(MercaShifted, Examples) {
  EXPECT_EQ(merca_shifted_sum(1, 2), Rational(1, 2));
  EXPECT_EQ(merca_shifted_sum(1, 1), 0);
  EXPECT_EQ(merca_shifted_sum(2, 2), Rational(1, 4));  // one term, cos^4(pi/4)
}

TEST(MercaShifted, MatchesOracle) {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (std::uint32_t p = 1; p <= 12; ++p) {
      EXPECT_EQ(merca_shifted_sum(p, n), truth(spec(SumFamily::MercaShifted, p, n)));
    }
  }
}

TEST(Barbero, PublishedValue) { EXPECT_EQ(barbero_R(12, 3), 3798310); }

TEST(Barbero, BoundaryValues) {
  EXPECT_EQ(barbero_R(1, 0), 1);
  for (std::uint32_t n = 0; n <= 6; ++n) EXPECT_EQ(barbero_R(0, n), n + 1);
  for (std::uint32_t m = 0; m <= 10; ++m) EXPECT_EQ(barbero_R(m, 0), 1);
}

TEST(Barbero, MatchesOracleAcrossTailThreshold) {
  for (std::uint32_t n = 0; n <= 5; ++n) {
    for (std::uint32_t m = 0; m <= 2 * n + 8; ++m) {
      EXPECT_EQ(barbero_R(m, n), truth(spec(SumFamily::BarberoR, m, n))) << m << " " << n;
    }
  }
}

TEST(Alternating, Examples) {
  EXPECT_EQ(alternating_sum(TrigKind::Cos, 2, 4), Rational(1, 2));
  EXPECT_EQ(alternating_sum(TrigKind::Cos, 1, 4), 0);
  EXPECT_EQ(alternating_sum(TrigKind::Sin, 2, 4), Rational(1, 2));
  EXPECT_THROW(alternating_sum(TrigKind::Cos, 1, 3), DomainError);
}

TEST(ShiftedSums, Examples) {
  EXPECT_EQ(shifted_cos_sum(1, 1), 0);
  EXPECT_EQ(shifted_cos_sum(1, 2), 1);
  EXPECT_EQ(shifted_cos_sum(2, 2), Rational(1, 2));
  EXPECT_EQ(shifted_sin_sum(1, 1), 1);
  EXPECT_EQ(shifted_sin_sum(2, 2), Rational(1, 2));
  EXPECT_EQ(shifted_sin_sum(3, 1), 1);
}

TEST(ShiftedSums, WindowFormsAgree) {
  for (std::uint32_t n = 1; n <= 14; ++n) {
    for (std::uint32_t m = 0; m <= 30; ++m) {
      EXPECT_EQ(shifted_cos_sum(m, n), shifted_cos_sum_window(m, n)) << m << " " << n;
      EXPECT_EQ(shifted_sin_sum(m, n), shifted_sin_sum_window(m, n)) << m << " " << n;
    }
  }
}

TEST(WeightedSums, Examples) {
  EXPECT_EQ(weight3_sum(TrigKind::Cos, 1, 1), Rational(3, 4));
  EXPECT_EQ(weight3_sum(TrigKind::Cos, 0, 2), 0);
  EXPECT_EQ(weight3_sum(TrigKind::Sin, 1, 1), Rational(-3, 4));
  EXPECT_EQ(weight_half_pi_sum(2, 1), 1);
  EXPECT_EQ(weight_half_pi_sum(1, 1), 1);
  EXPECT_EQ(weight_half_pi_sum(0, 3), 0);
  EXPECT_EQ(weight_pi3_sum(1, 2), Rational(3, 2));
  EXPECT_EQ(weight_pi3_sum(0, 2), 0);
  EXPECT_THROW(weight_pi3_sum(1, 3), DomainError);
}

TEST(WeightedSums, WeightPi3AtTwoTwoMatchesOracle) {
  const Rational expected = 3 * cos_power_sum(2, 1) - Rational(3, 2) * cos_power_sum(2, 2) +
                            cos_power_sum(2, 6) / 2 - cos_power_sum(2, 3);
  EXPECT_EQ(weight_pi3_sum(2, 2), expected);
  EXPECT_EQ(weight_pi3_sum(2, 2), truth(spec(SumFamily::WeightPi3, 2, 2)));
}

TEST(Ell5, Examples) {
  EXPECT_EQ(ell5_sum(Ell5Variant::Product, 1, 1), Rational(5, 8));
  EXPECT_EQ(ell5_sum(Ell5Variant::Cos2, 1, 1), Rational(5, 4));
  EXPECT_EQ(ell5_sum(Ell5Variant::Cos4, 1, 1), 0);
  EXPECT_THROW(ell5_sum(Ell5Variant::AltProduct, 1, 3), DomainError);
}

TEST(Ell5, ProductIsHalfTheSumOfItsCosines) {
  // cos(2t) cos(4t) = (cos 6t + cos 2t) / 2, and cos(6 pi k/5) = cos(4 pi k/5).
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t m = 0; m <= 12; ++m) {
      EXPECT_EQ(2 * ell5_sum(Ell5Variant::Product, m, n),
                ell5_sum(Ell5Variant::Cos2, m, n) + ell5_sum(Ell5Variant::Cos4, m, n));
    }
  }
}

TEST(Evaluate, DispatchMatchesDirectCalls) {
  EXPECT_EQ(evaluate(spec(SumFamily::CosPower, 2, 3)), Rational(9, 8));
  EXPECT_EQ(evaluate(spec(SumFamily::Coprime, 1, 3, 2, TrigKind::Sin)), Rational(3, 2));
  EXPECT_EQ(evaluate(spec(SumFamily::BarberoR, 12, 3)), 3798310);
}

TEST(Validate, RejectsInadmissibleParameters) {
  EXPECT_THROW(validate(spec(SumFamily::Alternating, 1, 5)), DomainError);
  EXPECT_THROW(validate(spec(SumFamily::Ell5AltProduct, 1, 5)), DomainError);
  EXPECT_THROW(validate(spec(SumFamily::Coprime, 1, 6, 4)), DomainError);
  EXPECT_THROW(validate(spec(SumFamily::MercaHalf, 0, 5)), DomainError);
  EXPECT_NO_THROW(validate(spec(SumFamily::BarberoR, 0, 0)));
}

TEST(Names, RoundTrip) {
  for (int f = 0; f <= static_cast<int>(SumFamily::Ell5Cos4); ++f) {
    const auto family = static_cast<SumFamily>(f);
    EXPECT_EQ(family_from_name(family_name(family)), family);
  }
  EXPECT_FALSE(family_from_name("nope").has_value());
  EXPECT_EQ(kind_from_name("sin"), TrigKind::Sin);
}

// Every family against the oracle on a small grid; the full grids run in the
// acceptance binary.
class FamilyOracle : public ::testing::TestWithParam<SumFamily> {};

TEST_P(FamilyOracle, SmallGrid) {
  const SumFamily f = GetParam();
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    if (kind == TrigKind::Sin && !family_uses_kind(f)) continue;
    for (std::uint32_t n = 1; n <= 6; ++n) {
      for (std::uint32_t q = 1; q <= (family_uses_q(f) ? 2 * n + 1 : 1); ++q) {
        for (std::uint32_t m = 0; m <= 9; ++m) {
          const SumSpec s{f, kind, m, n, q};
          try {
            validate(s);
          } catch (const DomainError&) {
            continue;
          }
          ASSERT_EQ(evaluate(s), truth(s)) << describe(s);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllFamilies, FamilyOracle,
    ::testing::Values(SumFamily::CosPower, SumFamily::SinPower, SumFamily::Scaled,
                      SumFamily::Coprime, SumFamily::GcdReduced, SumFamily::Quoniam,
                      SumFamily::MercaHalf, SumFamily::MercaShifted, SumFamily::BarberoR,
                      SumFamily::Alternating, SumFamily::ShiftedCos, SumFamily::ShiftedSin,
                      SumFamily::Weight3Cos, SumFamily::Weight3Sin, SumFamily::WeightHalfPi,
                      SumFamily::WeightPi3, SumFamily::Ell5Product, SumFamily::Ell5AltProduct,
                      SumFamily::Ell5Cos2, SumFamily::Ell5Cos4),
    [](const auto& info) {
      std::string name(family_name(info.param));
      for (auto& c : name) {
        if (c == '-') c = '_';
      }
      return name;
    });

}  // namespace
}  // namespace trigsum
