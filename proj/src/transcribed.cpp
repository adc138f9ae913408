#include "trigsum/transcribed.hpp"

namespace trigsum::transcribed {
namespace {

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

// sum_{p=1}^{upper} sign(p) C(2m, m - p step)
template <class Sign>
Integer binomial_tail(std::int64_t m, std::int64_t step, std::int64_t upper, Sign sign) {
  Integer acc = 0;
  for (std::int64_t p = 1; p <= upper; ++p) acc += sign(p) * binom(2 * m, m - p * step);
  return acc;
}

const auto kPlus = [](std::int64_t) { return 1; };

Rational over_pow4(const Integer& num, std::int64_t m) {
  return make_rational(num, pow2(static_cast<std::uint64_t>(2 * m)));
}

}  // namespace

Rational alternating_case_table(TrigKind kind, std::uint32_t m, std::uint32_t n) {
  if (n == 0) throw DomainError("n must be a positive integer");
  const std::int64_t mm = m, nn = n;
  if (mm < nn) return 0;
  if (mm < 2 * nn) {
    // Printed without the factor n and without the sine's sign.
    return 4 * over_pow4(binomial_tail(mm, nn, mm / nn, kPlus), mm);
  }
  const auto first_sign = [&](std::int64_t p) {
    return kind == TrigKind::Cos ? 1 : sign_pow(p * nn);
  };
  const Integer bracket = binomial_tail(mm, nn, mm / nn, first_sign) -
                          binomial_tail(mm, 2 * nn, mm / (2 * nn), kPlus);
  return 4 * over_pow4(bracket * nn, mm);
}

Rational weight3_case_table(TrigKind kind, std::uint32_t m, std::uint32_t n) {
  if (n == 0) throw DomainError("n must be a positive integer");
  const std::int64_t mm = m, nn = n;
  if (mm < nn) return 0;
  const auto sign_n = [&](std::int64_t p) {
    return kind == TrigKind::Cos ? 1 : sign_pow(p * nn);
  };
  const auto sign_3n = [&](std::int64_t p) {
    return kind == TrigKind::Cos ? 1 : sign_pow(3 * p * nn);
  };
  Integer bracket = binomial_tail(mm, nn, mm / nn, sign_n);
  if (mm >= 3 * nn) bracket -= binomial_tail(mm, 3 * nn, mm / (3 * nn), sign_3n);
  return over_pow4(bracket * (3 * nn), mm);
}

Rational weight_pi3_case_table(std::uint32_t m, std::uint32_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("weight-pi3 table: n must be even");
  const std::int64_t mm = m, nn = n, half = nn / 2;
  Integer bracket = 0;
  if (2 * mm >= nn) bracket += binomial_tail(mm, half, 2 * mm / nn, kPlus);
  if (mm >= nn) bracket -= binomial_tail(mm, nn, mm / nn, kPlus);
  if (2 * mm >= 3 * nn) bracket -= binomial_tail(mm, 3 * half, 2 * mm / (3 * nn), kPlus);
  if (mm >= 3 * nn) bracket += binomial_tail(mm, 3 * nn, mm / (3 * nn), kPlus);
  return over_pow4(bracket * (3 * nn), mm);
}

Rational alternating_third_case_table(std::uint32_t m, std::uint32_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("alternating third table: n must be even");
  const std::int64_t mm = m, nn = n;
  if (2 * mm < 3 * nn) return 0;
  Integer bracket = binomial_tail(mm, 3 * nn / 2, 2 * mm / (3 * nn), kPlus);
  if (mm >= 3 * nn) bracket -= binomial_tail(mm, 3 * nn, mm / (3 * nn), kPlus);
  return over_pow4(bracket * (6 * nn), mm);
}

Rational barbero_single_branch(std::uint32_t m, std::uint32_t n) {
  if (m == 0) throw DomainError("single-branch form requires m >= 1");
  const std::int64_t mm = m;
  return Rational(2 * static_cast<std::int64_t>(n) + 3, 2) * Rational(binom(2 * mm, mm)) -
         Rational(pow2(2 * mm - 1));
}

}  // namespace trigsum::transcribed
