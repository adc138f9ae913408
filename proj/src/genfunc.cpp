#include "trigsum/genfunc.hpp"

#include <numeric>

namespace trigsum {
namespace {

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_n(std::uint32_t n) {
  if (n == 0) throw DomainError("n must be a positive integer");
}

void require_h1(std::uint32_t n, std::uint32_t q) {
  require_n(n);
  if (q == 0 || q % 2 != 0) throw DomainError("h1: q must be a positive even integer");
  if (std::gcd(n, q) != 1) throw DomainError("h1: q must be coprime to n");
}

template <class Sign>
Rational sigma_with(std::uint32_t k, std::uint32_t n, Sign sign) {
  require_n(n);
  const std::int64_t kk = k;
  Integer acc = 0;
  for (std::int64_t p = 1; p <= kk / n; ++p) acc += sign(p) * binom(2 * kk, kk + p * n);
  return make_rational(acc, factorial(2 * kk));
}

Rational inverse_factorial(std::uint32_t j) { return make_rational(1, factorial(j)); }

}  // namespace

Rational SeriesCoefficients::evaluate_at(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::optional<std::size_t> first_mismatch(const SeriesCoefficients& a,
                                          const SeriesCoefficients& b) {
  const std::size_t common = std::min(a.coeffs.size(), b.coeffs.size());
  for (std::size_t j = 0; j < common; ++j) {
    if (a.coeffs[j] != b.coeffs[j]) return j;
  }
  if (a.coeffs.size() != b.coeffs.size()) return common;
  return std::nullopt;
}

Rational sigma(std::uint32_t k, std::uint32_t n) {
  return sigma_with(k, n, [](std::int64_t) { return 1; });
}

Rational sigma_minus(std::uint32_t k, std::uint32_t n) {
  return sigma_with(k, n, [n](std::int64_t p) { return sign_pow(p * n); });
}

Rational bessel_i0_coefficient(std::uint32_t j) {
  const Integer f = factorial(j);
  return make_rational(1, pow2(2 * static_cast<std::uint64_t>(j)) * f * f);
}

SeriesCoefficients g1_coefficients(std::uint32_t n, std::uint32_t K) {
  require_n(n);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t order = 0; order <= K; ++order) {
    if (order % 2 == 0) {
      s.coeffs.push_back(cos_power_sum(order / 2, n) * inverse_factorial(order));
    } else {
      // k <-> n - k pairs cancel in odd powers except for cos(0) = 1.
      s.coeffs.push_back(inverse_factorial(order));
    }
  }
  return s;
}

SeriesCoefficients g1_bessel_coefficients(std::uint32_t n, std::uint32_t K) {
  require_n(n);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t order = 0; order <= K; ++order) {
    if (order % 2 == 0) {
      const std::uint32_t j = order / 2;
      s.coeffs.push_back(n * bessel_i0_coefficient(j) +
                         2 * n * sigma(j, n) / Rational(pow2(2 * static_cast<std::uint64_t>(j))));
    } else {
      s.coeffs.push_back(inverse_factorial(order));
    }
  }
  return s;
}

SeriesCoefficients h1_coefficients(std::uint32_t n, std::uint32_t q, std::uint32_t K) {
  require_h1(n, q);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t order = 0; order <= K; ++order) {
    if (order % 2 == 0) {
      s.coeffs.push_back(coprime_sum(TrigKind::Sin, order / 2, n, q) * inverse_factorial(order));
    } else {
      // sin(q(n-k) pi/n) = -sin(qk pi/n) for even q.
      s.coeffs.emplace_back(0);
    }
  }
  return s;
}

SeriesCoefficients h1_bessel_coefficients(std::uint32_t n, std::uint32_t q, std::uint32_t K) {
  require_h1(n, q);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t order = 0; order <= K; ++order) {
    if (order % 2 == 0) {
      const std::uint32_t j = order / 2;
      s.coeffs.push_back(n * bessel_i0_coefficient(j) +
                         2 * n * sigma_minus(j, n) / Rational(pow2(2 * static_cast<std::uint64_t>(j))));
    } else {
      s.coeffs.emplace_back(0);
    }
  }
  return s;
}

SeriesCoefficients resolvent_coefficients(TrigKind kind, std::uint32_t n, std::uint32_t K) {
  require_n(n);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t j = 0; j <= K; ++j) s.coeffs.push_back(power_sum(kind, j, n) / n);
  return s;
}

SeriesCoefficients resolvent_closed_coefficients(TrigKind kind, std::uint32_t n, std::uint32_t K) {
  require_n(n);
  SeriesCoefficients s;
  s.coeffs.reserve(K + 1);
  for (std::uint32_t j = 0; j <= K; ++j) {
    const Rational tail = kind == TrigKind::Cos ? sigma(j, n) : sigma_minus(j, n);
    const Rational quarter_pow = make_rational(1, pow2(2 * static_cast<std::uint64_t>(j)));
    s.coeffs.push_back(Rational(binom(2 * static_cast<std::int64_t>(j), j)) * quarter_pow +
                       2 * Rational(factorial(2 * j)) * tail * quarter_pow);
  }
  return s;
}

}  // namespace trigsum
