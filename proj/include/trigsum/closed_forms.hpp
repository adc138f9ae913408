// Closed combinatorial forms for the basic trigonometric power sums.
//
// Every composite family is assembled from the two base evaluations
// C(m, n) = sum_{k=0}^{n-1} cos^{2m}(k pi / n) and
// S(m, n) = sum_{k=0}^{n-1} sin^{2m}(k pi / n), never from transcribed
// per-case tables (those live in transcribed.hpp and are checked against
// these).
//
// m = 0 is admitted everywhere with 0^0 = 1, so every summand is 1 and e.g.
// C(0, n) = S(0, n) = n.

#ifndef TRIGSUM_CLOSED_FORMS_HPP_
#define TRIGSUM_CLOSED_FORMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trigsum/exact.hpp"

namespace trigsum {

enum class TrigKind { Cos, Sin };

enum class SumFamily {
  CosPower,
  SinPower,
  Scaled,
  Coprime,
  GcdReduced,
  Quoniam,
  MercaHalf,
  MercaShifted,
  BarberoR,
  Alternating,
  ShiftedCos,
  ShiftedSin,
  Weight3Cos,
  Weight3Sin,
  WeightHalfPi,
  WeightPi3,
  Ell5Product,
  Ell5AltProduct,
  Ell5Cos2,
  Ell5Cos4,
};

enum class Ell5Variant { Product, AltProduct, Cos2, Cos4 };

/// One sum family plus its integer parameters.
///
/// `m` is the half-power (the exponent is 2m); for the Merca families it is
/// the p of their defining sums. `n` is the angle denominator; for
/// Alternating it is the (even) term count N. `q` is only read by Scaled,
/// Coprime and GcdReduced; `kind` only by Scaled, Coprime, GcdReduced and
/// Alternating.
struct SumSpec {
  SumFamily family = SumFamily::CosPower;
  TrigKind kind = TrigKind::Cos;
  std::uint32_t m = 0;
  std::uint32_t n = 1;
  std::uint32_t q = 1;

  friend bool operator==(const SumSpec&, const SumSpec&) = default;
};

bool family_uses_kind(SumFamily family);
bool family_uses_q(SumFamily family);

std::string_view family_name(SumFamily family);
std::optional<SumFamily> family_from_name(std::string_view name);
std::string_view kind_name(TrigKind kind);
std::optional<TrigKind> kind_from_name(std::string_view name);

/// Human-readable "family(kind, m=.., n=.., q=..)".
std::string describe(const SumSpec& spec);

/// Throws DomainError when `spec` violates its family's preconditions.
void validate(const SumSpec& spec);

/// Closed-form value of any family. Throws DomainError on invalid params.
Rational evaluate(const SumSpec& spec);

// --- Base sums --------------------------------------------------------------

/// C(m, n). Requires n >= 1.
Rational cos_power_sum(std::uint32_t m, std::uint32_t n);
/// S(m, n). Requires n >= 1.
Rational sin_power_sum(std::uint32_t m, std::uint32_t n);
Rational power_sum(TrigKind kind, std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{q-1} trig^{2m}(k pi / n) = (q/n) * base; q must be a multiple
/// of n.
Rational scaled_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q);

/// sum_{k=0}^{n-1} trig^{2m}(q k pi / n) for gcd(n, q) = 1; equals the base
/// sum for every such q.
Rational coprime_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q);

/// Same sum for arbitrary q >= 1: with r = gcd(n, q), r * base(m, n / r).
Rational gcd_reduced_sum(TrigKind kind, std::uint32_t m, std::uint32_t n, std::uint32_t q);

// --- Historical sums --------------------------------------------------------

/// (n+1) C(2m-1, m-1) - 2^{2m-1}, the value of
/// 2^{2m} sum_{k=1}^{floor(n/2)} cos^{2m}(k pi / (n+1)). Valid for 1 <= m <= n.
Rational quoniam_sum(std::uint32_t m, std::uint32_t n);

/// sum_{k=1}^{floor((n-1)/2)} cos^{2p}(k pi / n) for p, n >= 1.
Rational merca_half_sum(std::uint32_t p, std::uint32_t n);
/// The same sum through the symmetric binomial window
/// -1/2 + n/2^{2p+1} sum_{|k| <= p/n} C(2p, p + kn).
Rational merca_half_sum_window(std::uint32_t p, std::uint32_t n);

/// sum_{k=1}^{floor(n/2)} cos^{2p}((k - 1/2) pi / n) for p, n >= 1, via the
/// signed binomial window.
Rational merca_shifted_sum(std::uint32_t p, std::uint32_t n);

/// R(m, n) = 2^{2m} sum_{k=1}^{n+1} cos^{2m}(k pi / (2n+3)), amended form
/// (the tail sum switches on at m >= 2n+3). R(0, n) = n + 1 and R(m, 0) = 1.
Rational barbero_R(std::uint32_t m, std::uint32_t n);

// --- Extensions -------------------------------------------------------------

/// sum_{k=0}^{N-1} (-1)^k trig^{2m}(k pi / N) = 2 base(m, N/2) - base(m, N).
/// Requires N even.
Rational alternating_sum(TrigKind kind, std::uint32_t m, std::uint32_t N);

/// sum_{k=0}^{n-1} cos^{2m}((k + 1/2) pi / n) = C(m, 2n) - C(m, n).
Rational shifted_cos_sum(std::uint32_t m, std::uint32_t n);
/// The same value through the signed single-window binomial form.
Rational shifted_cos_sum_window(std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{n-1} sin^{2m}((k + 1/2) pi / n) = S(m, 2n) - S(m, n).
Rational shifted_sin_sum(std::uint32_t m, std::uint32_t n);
/// The same value through the weight (1 + (-1)^p - (-1)^{np}).
Rational shifted_sin_sum_window(std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{3n-1} cos(2k pi/3) trig^{2m}(k pi / 3n) = (3 base(m,n) - base(m,3n)) / 2.
Rational weight3_sum(TrigKind kind, std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{4n-1} cos(k pi/2) cos^{2m}(k pi / 4n) = 2 C(m,n) - C(m,2n).
Rational weight_half_pi_sum(std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{3n-1} cos(k pi/3) cos^{2m}(k pi / 3n) for even n:
/// 3 C(m,n/2) - 3 C(m,n)/2 + C(m,3n)/2 - C(m,3n/2).
Rational weight_pi3_sum(std::uint32_t m, std::uint32_t n);

/// Sums over k = 0..5n-1 of a fifths-of-pi cosine weight times
/// cos^{2m}(k pi / 5n):
///   Product    cos(2 pi k/5) cos(4 pi k/5)
///   AltProduct cos(pi k/5) cos(2 pi k/5)    (n even)
///   Cos2       cos(2 pi k/5)
///   Cos4       cos(4 pi k/5)
Rational ell5_sum(Ell5Variant variant, std::uint32_t m, std::uint32_t n);

}  // namespace trigsum

#endif  // TRIGSUM_CLOSED_FORMS_HPP_
