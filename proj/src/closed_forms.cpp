#include "trigsum/closed_forms.hpp"

#include <array>
#include <numeric>
#include <utility>

namespace trigsum {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_n(std::uint32_t n) { require(n >= 1, "n must be a positive integer"); }

// b <- C(N, j + steps) given b = C(N, j). Factors are batched into machine
// words so the big-integer work is one multiply and one exact division.
void advance_binomial(Integer& b, std::uint64_t N, std::uint64_t j, std::uint64_t steps) {
  Integer num = 1, den = 1;
  std::uint64_t nw = 1, dw = 1;
  for (std::uint64_t i = 0; i < steps; ++i) {
    const std::uint64_t a = N - j - i, c = j + i + 1;
    std::uint64_t t;
    if (__builtin_mul_overflow(nw, a, &t)) {
      mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), nw);
      t = a;
    }
    nw = t;
    if (__builtin_mul_overflow(dw, c, &t)) {
      mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), dw);
      t = c;
    }
    dw = t;
  }
  mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), nw);
  mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), dw);
  b *= num;
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), den.get_mpz_t());
}

// 2^{1-2m} n ( C(2m-1, m-1) + sum_{p=1}^{floor(m/n)} w(p) C(2m, m - p n) ).
// The window is walked from its far tail inward; C(2m-1, m-1) = C(2m, m)/2.
// The m = 0 case is the bare term count n.
template <class Weight>
Rational theorem_form(std::uint32_t m, std::uint32_t n, Weight weight) {
  if (m == 0) return Rational(n);
  const std::int64_t mm = m;
  const std::int64_t top = mm / n;
  Integer b = binom(2 * mm, mm - top * n);
  Integer bracket = 0;
  for (std::int64_t p = top; p >= 1; --p) {
    const int w = weight(p);
    if (w > 0) bracket += b;
    if (w < 0) bracket -= b;
    advance_binomial(b, 2 * static_cast<std::uint64_t>(mm), mm - p * n, n);
  }
  mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), 1);
  bracket += b;
  return make_rational(bracket * n, pow2(2 * mm - 1));
}

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

constexpr std::array<std::pair<SumFamily, std::string_view>, 20> kFamilyNames{{
    {SumFamily::CosPower, "C"},
    {SumFamily::SinPower, "S"},
    {SumFamily::Scaled, "scaled"},
    {SumFamily::Coprime, "coprime"},
    {SumFamily::GcdReduced, "gcd"},
    {SumFamily::Quoniam, "quoniam"},
    {SumFamily::MercaHalf, "merca-half"},
    {SumFamily::MercaShifted, "merca-shifted"},
    {SumFamily::BarberoR, "barbero"},
    {SumFamily::Alternating, "alt"},
    {SumFamily::ShiftedCos, "shifted-cos"},
    {SumFamily::ShiftedSin, "shifted-sin"},
    {SumFamily::Weight3Cos, "weight3-cos"},
    {SumFamily::Weight3Sin, "weight3-sin"},
    {SumFamily::WeightHalfPi, "weight-half-pi"},
    {SumFamily::WeightPi3, "weight-pi3"},
    {SumFamily::Ell5Product, "ell5-product"},
    {SumFamily::Ell5AltProduct, "ell5-alt-product"},
    {SumFamily::Ell5Cos2, "ell5-cos2"},
    {SumFamily::Ell5Cos4, "ell5-cos4"},
}};

}  // namespace

bool family_uses_kind(SumFamily family) {
  switch (family) {
    case SumFamily::Scaled:
    case SumFamily::Coprime:
    case SumFamily::GcdReduced:
    case SumFamily::Alternating:
      return true;
    default:
      return false;
  }
}

bool family_uses_q(SumFamily family) {
  return family == SumFamily::Scaled || family == SumFamily::Coprime ||
         family == SumFamily::GcdReduced;
}

std::string_view family_name(SumFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<SumFamily> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string_view kind_name(TrigKind kind) { return kind == TrigKind::Cos ? "cos" : "sin"; }

std::optional<TrigKind> kind_from_name(std::string_view name) {
  if (name == "cos") return TrigKind::Cos;
  if (name == "sin") return TrigKind::Sin;
  return std::nullopt;
}

std::string describe(const SumSpec& spec) {
  std::string s(family_name(spec.family));
  s += "(";
  if (family_uses_kind(spec.family)) s += std::string(kind_name(spec.kind)) + ", ";
  s += "m=" + std::to_string(spec.m) + ", n=" + std::to_string(spec.n);
  if (family_uses_q(spec.family)) s += ", q=" + std::to_string(spec.q);
  return s + ")";
}

void validate(const SumSpec& spec) {
  const auto m = spec.m, n = spec.n, q = spec.q;
  switch (spec.family) {
    case SumFamily::BarberoR:
      return;
    case SumFamily::Quoniam:
      require(m >= 1 && m < n + 1, "quoniam: requires 1 <= m < n + 1");
      return;
    case SumFamily::MercaHalf:
    case SumFamily::MercaShifted:
      require(m >= 1 && n >= 1, "merca: requires p >= 1 and n >= 1");
      return;
    default:
      break;
  }
  require_n(n);
  switch (spec.family) {
    case SumFamily::Scaled:
      require(q >= 1 && q % n == 0, "scaled: q must be a positive multiple of n");
      break;
    case SumFamily::Coprime:
      require(q >= 1 && std::gcd(n, q) == 1, "coprime: gcd(n, q) must be 1");
      break;
    case SumFamily::GcdReduced:
      require(q >= 1, "gcd: q must be positive");
      break;
    case SumFamily::Alternating:
      require(n % 2 == 0, "alt: N must be even");
      break;
    case SumFamily::WeightPi3:
      require(n % 2 == 0, "weight-pi3: n must be even");
      break;
    case SumFamily::Ell5AltProduct:
      require(n % 2 == 0, "ell5-alt-product: n must be even");
      break;
    default:
      break;
  }
}

Rational evaluate(const SumSpec& spec) {
  validate(spec);
  const auto m = spec.m, n = spec.n, q = spec.q;
  const auto kind = spec.kind;
  switch (spec.family) {
    case SumFamily::CosPower: return cos_power_sum(m, n);
    case SumFamily::SinPower: return sin_power_sum(m, n);
    case SumFamily::Scaled: return scaled_sum(kind, m, n, q);
    case SumFamily::Coprime: return coprime_sum(kind, m, n, q);
    case SumFamily::GcdReduced: return gcd_reduced_sum(kind, m, n, q);
    case SumFamily::Quoniam: return quoniam_sum(m, n);
    case SumFamily::MercaHalf: return merca_half_sum(m, n);
    case SumFamily::MercaShifted: return merca_shifted_sum(m, n);
    case SumFamily::BarberoR: return barbero_R(m, n);
    case SumFamily::Alternating: return alternating_sum(kind, m, n);
    case SumFamily::ShiftedCos: return shifted_cos_sum(m, n);
    case SumFamily::ShiftedSin: return shifted_sin_sum(m, n);
    case SumFamily::Weight3Cos: return weight3_sum(TrigKind::Cos, m, n);
    case SumFamily::Weight3Sin: return weight3_sum(TrigKind::Sin, m, n);
    case SumFamily::WeightHalfPi: return weight_half_pi_sum(m, n);
    case SumFamily::WeightPi3: return weight_pi3_sum(m, n);
    case SumFamily::Ell5Product: return ell5_sum(Ell5Variant::Product, m, n);
    case SumFamily::Ell5AltProduct: return ell5_sum(Ell5Variant::AltProduct, m, n);
    case SumFamily::Ell5Cos2: return ell5_sum(Ell5Variant::Cos2, m, n);
    case SumFamily::Ell5Cos4: return ell5_sum(Ell5Variant::Cos4, m, n);
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------

Rational cos_power_sum(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return theorem_form(m, n, [](std::int64_t) { return 1; });
}

Rational sin_power_sum(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return theorem_form(m, n, [n](std::int64_t p) { return sign_pow(p * n); });
}

Rational power_sum(TrigKind kind, std::uint32_t m, std::uint32_t n) {
  return kind == TrigKind::Cos ? cos_power_sum(m, n) : sin_power_sum(m, n);
}

Rational scaled_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q) {
  validate({SumFamily::Scaled, kind, m, n, q});
  return Rational(q / n) * power_sum(kind, m, n);
}

Rational coprime_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q) {
  validate({SumFamily::Coprime, kind, m, n, q});
  return power_sum(kind, m, n);
}

Rational gcd_reduced_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q) {
  validate({SumFamily::GcdReduced, kind, m, n, q});
  const std::uint32_t r = std::gcd(n, q);
  return Rational(r) * power_sum(kind, m, n / r);
}

// ---------------------------------------------------------------------------

Rational quoniam_sum(std::uint32_t m, std::uint32_t n) {
  validate({SumFamily::Quoniam, TrigKind::Cos, m, n, 1});
  const std::int64_t mm = m;
  return Rational(Integer(n + 1) * binom(2 * mm - 1, mm - 1) - pow2(2 * mm - 1));
}

Rational merca_half_sum(std::uint32_t p, std::uint32_t n) {
  validate({SumFamily::MercaHalf, TrigKind::Cos, p, n, 1});
  return (cos_power_sum(p, n) - 1) / 2;
}

Rational merca_half_sum_window(std::uint32_t p, std::uint32_t n) {
  validate({SumFamily::MercaHalf, TrigKind::Cos, p, n, 1});
  const std::int64_t pp = p, nn = n, reach = pp / nn;
  Integer window = 0;
  for (std::int64_t k = -reach; k <= reach; ++k) window += binom(2 * pp, pp + k * nn);
  return Rational(-1, 2) + make_rational(window * n, pow2(2 * pp + 1));
}

Rational merca_shifted_sum(std::uint32_t p, std::uint32_t n) {
  validate({SumFamily::MercaShifted, TrigKind::Cos, p, n, 1});
  const std::int64_t pp = p, nn = n, reach = pp / nn;
  Integer window = 0;
  for (std::int64_t k = -reach; k <= reach; ++k) {
    window += sign_pow(k) * binom(2 * pp, pp + k * nn);
  }
  return make_rational(window * n, pow2(2 * pp + 1));
}

Rational barbero_R(std::uint32_t m, std::uint32_t n) {
  if (m == 0) return Rational(n + 1);
  const std::int64_t mm = m, period = 2 * static_cast<std::int64_t>(n) + 3;
  Rational value = Rational(2 * static_cast<std::int64_t>(n) + 3, 2) * Rational(binom(2 * mm, mm)) -
                   Rational(pow2(2 * mm - 1));
  if (mm >= period) {
    Integer tail = 0;
    for (std::int64_t i = 1; i <= mm / period; ++i) tail += binom(2 * mm, mm - period * i);
    value += Rational(tail * period);
  }
  return value;
}

// ---------------------------------------------------------------------------

Rational alternating_sum(TrigKind kind, std::uint32_t m, std::uint32_t N) {
  validate({SumFamily::Alternating, kind, m, N, 1});
  return 2 * power_sum(kind, m, N / 2) - power_sum(kind, m, N);
}

Rational shifted_cos_sum(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return cos_power_sum(m, 2 * n) - cos_power_sum(m, n);
}

Rational shifted_cos_sum_window(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return theorem_form(m, n, [](std::int64_t p) { return sign_pow(p); });
}

Rational shifted_sin_sum(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return sin_power_sum(m, 2 * n) - sin_power_sum(m, n);
}

Rational shifted_sin_sum_window(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return theorem_form(m, n, [n](std::int64_t p) {
    return 1 + sign_pow(p) - sign_pow(p * n);
  });
}

Rational weight3_sum(TrigKind kind, std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return (3 * power_sum(kind, m, n) - power_sum(kind, m, 3 * n)) / 2;
}

Rational weight_half_pi_sum(std::uint32_t m, std::uint32_t n) {
  require_n(n);
  return 2 * cos_power_sum(m, n) - cos_power_sum(m, 2 * n);
}

Rational weight_pi3_sum(std::uint32_t m, std::uint32_t n) {
  validate({SumFamily::WeightPi3, TrigKind::Cos, m, n, 1});
  const std::uint32_t h = n / 2;
  return 3 * cos_power_sum(m, h) - 3 * cos_power_sum(m, n) / 2 +
         cos_power_sum(m, 3 * n) / 2 - cos_power_sum(m, 3 * h);
}

namespace {

// cos(2 n theta) expanded in even powers of cos(theta) (n >= 1), summed
// against cos^{2m}(k pi / 5n) over one full period.
Rational ell5_cos2(std::uint32_t m, std::uint32_t n) {
  const std::int64_t nn = n;
  Rational value = pow2_signed(2 * nn - 1) * cos_power_sum(m + n, 5 * n);
  Rational tail = 0;
  for (std::int64_t j = 0; j < nn; ++j) {
    const Integer b = binom(2 * nn - j - 2, j);
    if (b == 0) continue;
    tail += make_rational(sign_pow(j + 1) * b, j + 1) * pow2_signed(2 * nn - 2 * j - 2) *
            cos_power_sum(static_cast<std::uint32_t>(m + nn - j - 1), 5 * n);
  }
  return value + nn * tail;
}

}  // namespace

Rational ell5_sum(Ell5Variant variant, std::uint32_t m, std::uint32_t n) {
  require_n(n);
  switch (variant) {
    case Ell5Variant::Product:
      return (5 * cos_power_sum(m, n) - cos_power_sum(m, 5 * n)) / 4;
    case Ell5Variant::AltProduct: {
      require(n % 2 == 0, "ell5-alt-product: n must be even");
      const std::uint32_t h = n / 2;
      return (10 * cos_power_sum(m, h) - 2 * cos_power_sum(m, 5 * h) +
              cos_power_sum(m, 5 * n) - 5 * cos_power_sum(m, n)) /
             4;
    }
    case Ell5Variant::Cos2:
      return ell5_cos2(m, n);
    case Ell5Variant::Cos4:
      return (10 * cos_power_sum(m, n) - 2 * cos_power_sum(m, 5 * n)) / 4 - ell5_cos2(m, n);
  }
  throw DomainError("unknown ell5 variant");
}

}  // namespace trigsum
