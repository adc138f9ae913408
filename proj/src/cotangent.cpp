#include "trigsum/cotangent.hpp"

#include <stdexcept>
#include <string>

namespace trigsum {
namespace {

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_params(std::uint32_t n, std::uint32_t k) {
  if (n == 0) throw DomainError("cotangent sum: n must be >= 1");
  if (k < 2) throw DomainError("cotangent sum: k must be >= 2");
}

ByrneSmithCoefficients build_table(std::uint32_t n_max, bool transcribed) {
  if (n_max == 0) throw DomainError("byrne-smith: n_max must be >= 1");
  ByrneSmithCoefficients b(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    Rational closed_so_far = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
      Rational acc = 0;
      for (std::uint32_t l = 1; l <= n - j; ++l) {
        acc += sign_pow(l) * Rational(binom(2 * n, l)) * b.at(n - l, j);
      }
      const std::uint64_t e = 2 * static_cast<std::uint64_t>(n - j);
      const Integer denom = transcribed ? pow2(e - 1) : pow2(e) - 1;
      b.at(n, j) = acc / Rational(denom);
      closed_so_far += b.at(n, j);
    }
    b.at(n, n) = Rational(1 + sign_pow(n - 1)) - closed_so_far;
  }
  return b;
}

}  // namespace

Rational cot_power_sum(std::uint32_t n, std::uint32_t k,
                       std::optional<std::size_t> distinguished) {
  require_params(n, k);
  const std::size_t slots = 2 * static_cast<std::size_t>(n) + 1;
  const std::size_t d = distinguished.value_or(2 * static_cast<std::size_t>(n));
  if (d >= slots) throw DomainError("cotangent sum: distinguished slot out of range");

  std::vector<Rational> weight(n + 1), kpow(n + 1);
  for (std::uint32_t j = 0; j <= n; ++j) {
    weight[j] = bernoulli(2 * j) / Rational(factorial(2 * j));
    kpow[j] = pow(Rational(k), 2 * static_cast<std::int64_t>(j) - 1);
  }

  Rational total = 0;
  Rational term;
  for (const auto& c : compositions(n, static_cast<std::uint32_t>(slots))) {
    term = kpow[c.parts[d]];
    for (const auto part : c.parts) term *= weight[part];
    total += term;
  }

  return sign_pow(n) * Rational(k) * (1 - Rational(pow2(2 * static_cast<std::uint64_t>(n))) * total);
}

Rational cot_power_sum_positive_indices(std::uint32_t n, std::uint32_t k) {
  require_params(n, k);
  // 2n+1 indices all >= 1 cannot sum to n: the multi-sum is empty.
  return sign_pow(n) * Rational(k);
}

Integer CotPolynomial::common_denominator() const {
  return lcm_of_denominators(coefficients);
}

CotPolynomial cot_sum_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("cot polynomial: n must be >= 1");
  std::vector<Rational> xs, ys;
  for (std::uint32_t k = 2; k <= 2 * n + 3; ++k) {
    xs.emplace_back(k);
    ys.push_back(cot_power_sum(n, k));
  }
  CotPolynomial poly{n, interpolate(xs, ys)};
  for (std::uint32_t k = 2 * n + 4; k <= 2 * n + 6; ++k) {
    if (poly(Rational(k)) != cot_power_sum(n, k)) {
      throw std::logic_error("cot polynomial: interpolant disagrees at k = " + std::to_string(k));
    }
  }
  if (poly.degree() != 2 * n) {
    throw std::logic_error("cot polynomial: unexpected degree " + std::to_string(poly.degree()));
  }
  return poly;
}

// ---------------------------------------------------------------------------

ByrneSmithCoefficients::ByrneSmithCoefficients(std::uint32_t n_max)
    : n_max_(n_max), rows_(n_max + 1) {
  for (std::uint32_t n = 1; n <= n_max; ++n) rows_[n].resize(n + 1);
}

const Rational& ByrneSmithCoefficients::at(std::uint32_t n, std::uint32_t j) const {
  if (n == 0 || n > n_max_ || j == 0 || j > n) throw DomainError("byrne-smith: index out of range");
  return rows_[n][j];
}

Rational& ByrneSmithCoefficients::at(std::uint32_t n, std::uint32_t j) {
  if (n == 0 || n > n_max_ || j == 0 || j > n) throw DomainError("byrne-smith: index out of range");
  return rows_[n][j];
}

Rational ByrneSmithCoefficients::row_sum(std::uint32_t n) const {
  Rational s = 0;
  for (std::uint32_t j = 1; j <= n; ++j) s += at(n, j);
  return s;
}

ByrneSmithCoefficients byrne_smith_coefficients(std::uint32_t n_max) {
  return build_table(n_max, false);
}

ByrneSmithCoefficients byrne_smith_coefficients_transcribed(std::uint32_t n_max) {
  return build_table(n_max, true);
}

namespace {

Rational byrne_smith_polynomial(const ByrneSmithCoefficients& b, std::uint32_t n,
                                std::uint32_t k, int linear_sign) {
  Rational value = linear_sign * Rational(k);
  const Rational k2 = Rational(k) * k;
  Rational power = 1;
  for (std::uint32_t j = 1; j <= n; ++j) {
    power *= k2;
    value += b.at(n, j) * power;
  }
  return value;
}

}  // namespace

Rational byrne_smith_sum(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw DomainError("byrne-smith: n and k must be >= 1");
  return byrne_smith_polynomial(byrne_smith_coefficients(n), n, k, sign_pow(n));
}

Rational byrne_smith_sum_transcribed(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw DomainError("byrne-smith: n and k must be >= 1");
  return byrne_smith_polynomial(byrne_smith_coefficients_transcribed(n), n, k, sign_pow(k));
}

}  // namespace trigsum
