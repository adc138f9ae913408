#include "trigsum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "trigsum/errors.hpp"

namespace trigsum::oracle {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

unsigned bit_length(const Integer& x) {
  return x == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

unsigned ceil_log2(std::uint64_t x) {
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

// sum_{k=first}^{last} term(k)
Interval accumulate(std::int64_t first, std::int64_t last, mpfr_prec_t prec,
                    const std::function<Interval(std::int64_t)>& term) {
  Interval total = Interval::from_rational(0, prec);
  for (std::int64_t k = first; k <= last; ++k) total += term(k);
  return total;
}

Interval trig_pi(TrigKind kind, const Integer& num, const Integer& den, mpfr_prec_t prec) {
  return kind == TrigKind::Cos ? Interval::cos_pi(num, den, prec) : Interval::sin_pi(num, den, prec);
}

// sum_{k=first}^{last} trig^{2m}((k * step + offset) pi / den)
Interval plain_power_sum(TrigKind kind, std::uint32_t m, std::int64_t first, std::int64_t last,
                         std::int64_t step, std::int64_t offset, std::int64_t den,
                         mpfr_prec_t prec) {
  return accumulate(first, last, prec, [&](std::int64_t k) {
    return trig_pi(kind, Integer(k * step + offset), Integer(den), prec).pow(2ul * m);
  });
}

// sum_{k=0}^{count-1} weight(k) * trig^{2m}(k pi / den)
Interval weighted_power_sum(TrigKind kind, std::uint32_t m, std::int64_t count, std::int64_t den,
                            const std::function<Interval(std::int64_t)>& weight,
                            mpfr_prec_t prec) {
  return accumulate(0, count - 1, prec, [&](std::int64_t k) {
    return weight(k) * trig_pi(kind, Integer(k), Integer(den), prec).pow(2ul * m);
  });
}

std::function<Interval(std::int64_t)> cos_weight(std::int64_t num, std::int64_t den,
                                                 mpfr_prec_t prec) {
  return [=](std::int64_t k) { return Interval::cos_pi(Integer(k * num), Integer(den), prec); };
}

Interval spec_sum(const SumSpec& spec, mpfr_prec_t prec) {
  validate(spec);
  const std::uint32_t m = spec.m;
  const std::int64_t n = spec.n;
  const std::int64_t q = spec.q;
  const TrigKind kind = spec.kind;
  switch (spec.family) {
    case SumFamily::CosPower:
      return plain_power_sum(TrigKind::Cos, m, 0, n - 1, 1, 0, n, prec);
    case SumFamily::SinPower:
      return plain_power_sum(TrigKind::Sin, m, 0, n - 1, 1, 0, n, prec);
    case SumFamily::Scaled:
      return plain_power_sum(kind, m, 0, q - 1, 1, 0, n, prec);
    case SumFamily::Coprime:
    case SumFamily::GcdReduced:
      return plain_power_sum(kind, m, 0, n - 1, q, 0, n, prec);
    case SumFamily::Quoniam:
      return plain_power_sum(TrigKind::Cos, m, 1, n / 2, 1, 0, n + 1, prec)
          .scaled(pow2(2ull * m));
    case SumFamily::MercaHalf:
      return plain_power_sum(TrigKind::Cos, m, 1, (n - 1) / 2, 1, 0, n, prec);
    case SumFamily::MercaShifted:
      return plain_power_sum(TrigKind::Cos, m, 1, n / 2, 2, -1, 2 * n, prec);
    case SumFamily::BarberoR:
      return plain_power_sum(TrigKind::Cos, m, 1, n + 1, 1, 0, 2 * n + 3, prec)
          .scaled(pow2(2ull * m));
    case SumFamily::Alternating:
      return weighted_power_sum(
          kind, m, n, n,
          [prec](std::int64_t k) { return Interval::from_rational(k % 2 == 0 ? 1 : -1, prec); },
          prec);
    case SumFamily::ShiftedCos:
      return plain_power_sum(TrigKind::Cos, m, 0, n - 1, 2, 1, 2 * n, prec);
    case SumFamily::ShiftedSin:
      return plain_power_sum(TrigKind::Sin, m, 0, n - 1, 2, 1, 2 * n, prec);
    case SumFamily::Weight3Cos:
      return weighted_power_sum(TrigKind::Cos, m, 3 * n, 3 * n, cos_weight(2, 3, prec), prec);
    case SumFamily::Weight3Sin:
      return weighted_power_sum(TrigKind::Sin, m, 3 * n, 3 * n, cos_weight(2, 3, prec), prec);
    case SumFamily::WeightHalfPi:
      return weighted_power_sum(TrigKind::Cos, m, 4 * n, 4 * n, cos_weight(1, 2, prec), prec);
    case SumFamily::WeightPi3:
      return weighted_power_sum(TrigKind::Cos, m, 3 * n, 3 * n, cos_weight(1, 3, prec), prec);
    case SumFamily::Ell5Product: {
      auto w2 = cos_weight(2, 5, prec), w4 = cos_weight(4, 5, prec);
      return weighted_power_sum(
          TrigKind::Cos, m, 5 * n, 5 * n, [&](std::int64_t k) { return w2(k) * w4(k); }, prec);
    }
    case SumFamily::Ell5AltProduct: {
      auto w1 = cos_weight(1, 5, prec), w2 = cos_weight(2, 5, prec);
      return weighted_power_sum(
          TrigKind::Cos, m, 5 * n, 5 * n, [&](std::int64_t k) { return w1(k) * w2(k); }, prec);
    }
    case SumFamily::Ell5Cos2:
      return weighted_power_sum(TrigKind::Cos, m, 5 * n, 5 * n, cos_weight(2, 5, prec), prec);
    case SumFamily::Ell5Cos4:
      return weighted_power_sum(TrigKind::Cos, m, 5 * n, 5 * n, cos_weight(4, 5, prec), prec);
  }
  throw DomainError("direct_sum: unknown family");
}

Interval cot_sum(const CotSumParams& p, mpfr_prec_t prec) {
  if (p.n < 1 || p.k < 2) throw DomainError("cot sum: requires n >= 1 and k >= 2");
  return accumulate(1, p.k - 1, prec, [&](std::int64_t r) {
    return Interval::cot_pi(Integer(r), Integer(p.k), prec).pow(2ul * p.n);
  });
}

Interval byrne_smith_direct(const ByrneSmithParams& p, mpfr_prec_t prec) {
  if (p.n < 1 || p.k < 1) throw DomainError("Byrne-Smith sum: requires n >= 1 and k >= 1");
  return accumulate(1, p.k, prec, [&](std::int64_t r) {
    return Interval::cot_pi(Integer(2 * r - 1), Integer(4 * std::int64_t{p.k}), prec)
        .pow(2ul * p.n);
  });
}

Interval odd_power_direct(const OddPowerParams& p, mpfr_prec_t prec) {
  if (p.n < 1) throw DomainError("odd power sum: requires n >= 1");
  return accumulate(0, std::int64_t{p.n} - 1, prec, [&](std::int64_t k) {
    return Interval::cos_pi(Integer(k), Integer(p.n), prec).pow(2ul * p.j + 1);
  });
}

// Denominators of cot_sum_polynomial(n) are cheap to cache and expensive to
// recompute, so keep them per n.
Integer cot_denominator(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, Integer> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Integer d = cot_sum_polynomial(n).common_denominator();
  std::lock_guard lock(mutex);
  cache.emplace(n, d);
  return d;
}

// Scaled width must be < 2^-guard.
bool narrow_enough(const Interval& value, const ReconstructionPolicy& policy) {
  BigFloat w = value.width();
  mpfr_mul_z(w.get(), w.get(), policy.denominator_bound.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_2si(w.get(), w.get(), static_cast<long>(policy.guard_bits), MPFR_RNDU);
  return mpfr_cmp_ui(w.get(), 1) < 0;
}

std::uint64_t term_count(const SumSpec& spec) {
  switch (spec.family) {
    case SumFamily::Scaled:
      return spec.q;
    case SumFamily::Weight3Cos:
    case SumFamily::Weight3Sin:
    case SumFamily::WeightPi3:
      return 3ull * spec.n;
    case SumFamily::WeightHalfPi:
      return 4ull * spec.n;
    case SumFamily::Ell5Product:
    case SumFamily::Ell5AltProduct:
    case SumFamily::Ell5Cos2:
    case SumFamily::Ell5Cos4:
      return 5ull * spec.n;
    case SumFamily::BarberoR:
      return 2ull * spec.n + 3;
    default:
      return 2ull * spec.n + 1;
  }
}

}  // namespace

IntervalValue direct_sum(const Target& target, mpfr_prec_t precision_bits) {
  if (precision_bits < 64) throw DomainError("direct_sum: precision must be >= 64 bits");
  return std::visit(
      Overloaded{
          [&](const SumSpec& s) { return spec_sum(s, precision_bits); },
          [&](const CotSumParams& p) { return cot_sum(p, precision_bits); },
          [&](const ByrneSmithParams& p) { return byrne_smith_direct(p, precision_bits); },
          [&](const OddPowerParams& p) { return odd_power_direct(p, precision_bits); },
      },
      target);
}

IntervalValue direct_sum(const Target& target, mpfr_prec_t precision_bits,
                         const ReconstructionPolicy& policy) {
  Interval value = direct_sum(target, precision_bits);
  if (!narrow_enough(value, policy)) {
    throw PrecisionExhausted("direct_sum: enclosure too wide at " +
                             std::to_string(precision_bits) + " bits");
  }
  return value;
}

Rational reconstruct(const IntervalValue& value, const ReconstructionPolicy& policy) {
  if (policy.denominator_bound <= 0) throw DomainError("reconstruct: bound must be positive");
  if (!narrow_enough(value, policy)) {
    throw AmbiguousReconstruction("reconstruct: interval too wide for the denominator bound");
  }
  const mpfr_prec_t prec = value.precision() + static_cast<mpfr_prec_t>(bit_length(policy.denominator_bound));
  BigFloat lo(prec), hi(prec);
  mpfr_mul_z(lo.get(), value.lower().get(), policy.denominator_bound.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(hi.get(), value.upper().get(), policy.denominator_bound.get_mpz_t(), MPFR_RNDU);
  Integer first, last;
  mpfr_get_z(first.get_mpz_t(), lo.get(), MPFR_RNDU);
  mpfr_get_z(last.get_mpz_t(), hi.get(), MPFR_RNDD);
  if (first > last) {
    throw NoIntegerNearby("reconstruct: no multiple of 1/" + policy.denominator_bound.get_str() +
                          " inside [" + value.lower().to_string() + ", " +
                          value.upper().to_string() + "]");
  }
  if (first != last) throw AmbiguousReconstruction("reconstruct: several candidates");
  return make_rational(first, policy.denominator_bound);
}

Integer denominator_bound_for(const Target& target) {
  return std::visit(
      Overloaded{
          [](const SumSpec& s) -> Integer {
            switch (s.family) {
              case SumFamily::Quoniam:
              case SumFamily::BarberoR:
                return 1;
              default:
                return pow2(2ull * s.m + 2);
            }
          },
          [](const CotSumParams& p) -> Integer {
            if (p.n <= 5) return cot_denominator(p.n);
            return factorial(2ull * p.n + 1) * pow2(2ull * p.n);
          },
          [](const ByrneSmithParams&) -> Integer { return 1; },
          [](const OddPowerParams& p) -> Integer { return pow2(2ull * p.j + 2); },
      },
      target);
}

mpfr_prec_t default_precision(const Target& target) {
  return std::visit(
      Overloaded{
          [](const SumSpec& s) -> mpfr_prec_t {
            return 2 * static_cast<mpfr_prec_t>(s.m) + ceil_log2(term_count(s) + 1) + 96;
          },
          [](const CotSumParams& p) -> mpfr_prec_t {
            return 96 + (2 * p.n + 1) * ceil_log2(p.k + 1) +
                   bit_length(denominator_bound_for(Target{p}));
          },
          [](const ByrneSmithParams& p) -> mpfr_prec_t {
            return 96 + (2 * p.n + 1) * ceil_log2(4ull * p.k + 1);
          },
          [](const OddPowerParams& p) -> mpfr_prec_t {
            return 2 * static_cast<mpfr_prec_t>(p.j) + ceil_log2(p.n + 1ull) + 96;
          },
      },
      target);
}

Rational exact_value(const Target& target, unsigned max_retries) {
  const ReconstructionPolicy policy{denominator_bound_for(target), 32};
  mpfr_prec_t prec = default_precision(target);
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt, prec *= 2) {
    try {
      return reconstruct(direct_sum(target, prec, policy), policy);
    } catch (const PrecisionExhausted&) {
    } catch (const AmbiguousReconstruction&) {
    }
  }
  throw PrecisionExhausted("exact_value: no reconstruction after " +
                           std::to_string(max_retries) + " retries");
}

Rational root_of_unity_power_sum(TrigKind kind, std::uint32_t power, std::uint32_t n) {
  if (n < 1) throw DomainError("root_of_unity_power_sum: n must be >= 1");
  if (kind == TrigKind::Sin && power % 2 != 0) {
    throw DomainError("root_of_unity_power_sum: sine needs an even power");
  }
  // trig^p(x) = 2^{-p} sum_j c_j e^{i (2j - p) x}. Over x = k pi / n the
  // exponential with frequency t sums to n when 2n | t, to 0 for other even t,
  // and to 2 / (1 - e^{i pi t / n}) for odd t, whose real part is 1.
  const std::int64_t p = power;
  Integer total = 0;
  for (std::int64_t j = 0; j <= p; ++j) {
    Integer c = binom(p, j);
    if (kind == TrigKind::Sin && j % 2 == 1) c = -c;
    const std::int64_t t = 2 * j - p;
    if (t % 2 != 0) {
      total += c;
    } else if (t % (2 * std::int64_t{n}) == 0) {
      total += c * n;
    }
  }
  if (kind == TrigKind::Sin && (p / 2) % 2 == 1) total = -total;
  return make_rational(total, pow2(power));
}

Interval direct_exponential_sum(TrigKind kind, std::uint32_t n, std::uint32_t q,
                                const Rational& z, mpfr_prec_t precision_bits) {
  if (n < 1) throw DomainError("direct_exponential_sum: n must be >= 1");
  const Interval zi = Interval::from_rational(z, precision_bits);
  return accumulate(0, std::int64_t{n} - 1, precision_bits, [&](std::int64_t k) {
    return (zi * trig_pi(kind, Integer(std::int64_t{q} * k), Integer(n), precision_bits)).exp();
  });
}

}  // namespace trigsum::oracle
