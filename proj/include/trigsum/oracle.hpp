// Independent ground truth for every sum the library evaluates.
//
// The defining finite sum is evaluated term by term in outward-rounded
// interval arithmetic, then the exact rational is recovered from the
// enclosure using an a-priori bound on its denominator. Nothing here calls
// into the closed forms except to size a denominator bound for the
// cotangent family.

#ifndef TRIGSUM_ORACLE_HPP_
#define TRIGSUM_ORACLE_HPP_

#include <cstdint>
#include <variant>

#include "trigsum/closed_forms.hpp"
#include "trigsum/cotangent.hpp"
#include "trigsum/interval.hpp"

namespace trigsum::oracle {

/// sum_{r=1}^{k} cot^{2n}((r - 1/2) pi / 2k)
struct ByrneSmithParams {
  std::uint32_t n = 1;
  std::uint32_t k = 1;
};

/// sum_{k=0}^{n-1} cos^{2j+1}(k pi / n)
struct OddPowerParams {
  std::uint32_t j = 0;
  std::uint32_t n = 1;
};

using Target = std::variant<SumSpec, CotSumParams, ByrneSmithParams, OddPowerParams>;

using IntervalValue = Interval;

struct ReconstructionPolicy {
  Integer denominator_bound = 1;
  unsigned guard_bits = 32;
};

/// Enclosure of the defining sum of `target`. Requires precision_bits >= 64.
IntervalValue direct_sum(const Target& target, mpfr_prec_t precision_bits);

/// Same, but throws PrecisionExhausted if the enclosure is too wide for
/// `policy` to reconstruct from.
IntervalValue direct_sum(const Target& target, mpfr_prec_t precision_bits,
                         const ReconstructionPolicy& policy);

/// The unique p / denominator_bound inside `value`. Throws
/// AmbiguousReconstruction if the scaled width is not below 2^-guard_bits and
/// NoIntegerNearby if the scaled interval holds no integer.
Rational reconstruct(const IntervalValue& value, const ReconstructionPolicy& policy);

/// Trig power families: 2^{2m+2}. Cotangent: lcm of the interpolating
/// polynomial's denominators for n <= 5, (2n+1)! 2^{2n} beyond. Integer
/// valued families (Quoniam, Barbero, Byrne-Smith): 1.
Integer denominator_bound_for(const Target& target);

/// Starting precision: 2m + ceil(log2(n+1)) + 96 for trig families, and the
/// analogous magnitude-plus-96 estimate for the cotangent families.
mpfr_prec_t default_precision(const Target& target);

/// direct_sum + reconstruct, doubling precision up to `max_retries` times.
/// NoIntegerNearby propagates immediately; it means the bound is wrong.
Rational exact_value(const Target& target, unsigned max_retries = 4);

/// sum_{k=0}^{n-1} trig^power(k pi / n) through the binomial expansion into
/// unit exponentials and closed geometric sums. Fully exact; cosine accepts
/// any power, sine only even powers.
Rational root_of_unity_power_sum(TrigKind kind, std::uint32_t power, std::uint32_t n);

/// sum_{k=0}^{n-1} exp(z trig(q k pi / n)).
Interval direct_exponential_sum(TrigKind kind, std::uint32_t n, std::uint32_t q,
                                const Rational& z, mpfr_prec_t precision_bits);

}  // namespace trigsum::oracle

#endif  // TRIGSUM_ORACLE_HPP_
