#include "trigsum/genfunc.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "trigsum/oracle.hpp"

namespace trigsum {
namespace {

constexpr mpfr_prec_t kPrec = 256;

// |enclosure - value| < tol on both ends.
bool close_to(const Interval& enclosure, const Rational& value, double tol) {
  const Interval diff = enclosure - Interval::from_rational(value, kPrec);
  return diff.lower().to_double() > -tol && diff.upper().to_double() < tol;
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(2, 3), 0);
  EXPECT_EQ(sigma(3, 3), Rational(1, 720));
  EXPECT_EQ(sigma(4, 2), Rational(29, 40320));
  EXPECT_EQ(sigma_minus(3, 3), Rational(-1, 720));
  EXPECT_EQ(sigma_minus(4, 2), Rational(29, 40320));
  EXPECT_EQ(sigma_minus(1, 5), 0);
}

TEST(Sigma, VanishesBelowN) {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t k = 0; k < n; ++k) {
      EXPECT_EQ(sigma(k, n), 0);
      EXPECT_EQ(sigma_minus(k, n), 0);
    }
  }
}

TEST(Sigma, EvenNMakesSignsIrrelevant) {
  for (std::uint32_t n = 2; n <= 10; n += 2) {
    for (std::uint32_t k = 0; k <= 30; ++k) EXPECT_EQ(sigma(k, n), sigma_minus(k, n));
  }
}

TEST(BesselI0, Coefficients) {
  EXPECT_EQ(bessel_i0_coefficient(0), 1);
  EXPECT_EQ(bessel_i0_coefficient(1), Rational(1, 4));
  EXPECT_EQ(bessel_i0_coefficient(2), Rational(1, 64));
}

TEST(G1, BothRoutesAgree) {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(first_mismatch(g1_coefficients(n, 40), g1_bessel_coefficients(n, 40)), std::nullopt)
        << n;
  }
}

TEST(G1, CoefficientsAreOraclePowerSums) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto g = g1_coefficients(n, 30);
    for (std::uint32_t j = 0; j <= 30; ++j) {
      EXPECT_EQ(g[j] * Rational(factorial(j)), oracle::root_of_unity_power_sum(TrigKind::Cos, j, n))
          << n << " " << j;
    }
  }
}

TEST(G1, SeriesMatchesDirectExponentialSum) {
  const Rational z(3, 4);
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const Rational series = g1_coefficients(n, 60).evaluate_at(z);
    EXPECT_TRUE(close_to(oracle::direct_exponential_sum(TrigKind::Cos, n, 1, z, kPrec), series,
                         1e-40))
        << n;
  }
}

TEST(H1, BothRoutesAgreeAndOddCoefficientsVanish) {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t q = 2; q <= 2 * n + 1; q += 2) {
      if (std::gcd(n, q) != 1) continue;
      const auto h = h1_coefficients(n, q, 40);
      EXPECT_EQ(first_mismatch(h, h1_bessel_coefficients(n, q, 40)), std::nullopt) << n << " " << q;
      for (std::uint32_t j = 1; j <= 40; j += 2) EXPECT_EQ(h[j], 0);
    }
  }
}

TEST(H1, SeriesMatchesDirectExponentialSum) {
  // The direct sum includes the odd powers, so this also checks that they
  // cancel.
  const Rational z(-5, 4);
  for (std::uint32_t n = 1; n <= 9; n += 2) {
    const Rational series = h1_coefficients(n, 2, 70).evaluate_at(z);
    EXPECT_TRUE(close_to(oracle::direct_exponential_sum(TrigKind::Sin, n, 2, z, kPrec), series,
                         1e-40))
        << n;
  }
}

TEST(H1, RejectsOddOrNonCoprimeQ) {
  EXPECT_THROW(h1_coefficients(5, 3, 4), DomainError);
  EXPECT_THROW(h1_coefficients(4, 2, 4), DomainError);
}

TEST(Resolvent, BothRoutesAgree) {
  for (TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
    for (std::uint32_t n = 1; n <= 10; ++n) {
      EXPECT_EQ(first_mismatch(resolvent_coefficients(kind, n, 40),
                               resolvent_closed_coefficients(kind, n, 40)),
                std::nullopt)
          << kind_name(kind) << " " << n;
    }
  }
}

TEST(FirstMismatch, ReportsIndexAndLengthDifference) {
  SeriesCoefficients a{{1, 2, 3}}, b{{1, 2, 4}}, c{{1, 2}};
  EXPECT_EQ(first_mismatch(a, b), 2u);
  EXPECT_EQ(first_mismatch(a, c), 2u);
  EXPECT_EQ(first_mismatch(a, a), std::nullopt);
}

}  // namespace
}  // namespace trigsum
