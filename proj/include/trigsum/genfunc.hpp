// Truncated power series behind the exponential and resolvent generating
// functions of the cosine/sine power sums. Each series is produced by two
// independent routes so the identity between them can be checked
// coefficient by coefficient:
//
//   *_coefficients         the defining side (sum over k of exp or 1/(1 - z trig^2))
//   *_bessel_coefficients  the I0 + sigma side
//   resolvent_*            the same for 1/(1 - z trig^2)

#ifndef TRIGSUM_GENFUNC_HPP_
#define TRIGSUM_GENFUNC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigsum/closed_forms.hpp"

namespace trigsum {

/// coeffs[j] is the coefficient of z^j, j = 0..order.
struct SeriesCoefficients {
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Rational& operator[](std::size_t j) const { return coeffs.at(j); }

  /// Exact value of the truncated series at z.
  Rational evaluate_at(const Rational& z) const;
};

/// First index where the series differ, or nullopt if identical (series of
/// different order always differ at the shorter one's end).
std::optional<std::size_t> first_mismatch(const SeriesCoefficients& a,
                                          const SeriesCoefficients& b);

/// (1/(2k)!) sum_{p=1}^{floor(k/n)} C(2k, k + pn). Zero for k < n.
Rational sigma(std::uint32_t k, std::uint32_t n);

/// (1/(2k)!) sum_{p=1}^{floor(k/n)} (-1)^{pn} C(2k, k + pn).
Rational sigma_minus(std::uint32_t k, std::uint32_t n);

/// Coefficient of z^{2j} in I0(z): 1 / (4^j (j!)^2).
Rational bessel_i0_coefficient(std::uint32_t j);

/// sum_{k=0}^{n-1} exp(z cos(k pi / n)) to order K: z^{2j} carries
/// C(j, n)/(2j)!, z^{2j+1} carries the odd-power sum 1/(2j+1)!.
SeriesCoefficients g1_coefficients(std::uint32_t n, std::uint32_t K);
/// n I0(z) + 2n sum_j (z/2)^{2j} sigma_j(n) + sinh z, to order K.
SeriesCoefficients g1_bessel_coefficients(std::uint32_t n, std::uint32_t K);

/// sum_{k=0}^{n-1} exp(z sin(q k pi / n)) to order K, for q even and
/// coprime to n: z^{2j} carries S(j, n)/(2j)!, odd orders vanish.
SeriesCoefficients h1_coefficients(std::uint32_t n, std::uint32_t q, std::uint32_t K);
/// n I0(z) + 2n sum_j (z/2)^{2j} sigma^-_j(n), to order K.
SeriesCoefficients h1_bessel_coefficients(std::uint32_t n, std::uint32_t q, std::uint32_t K);

/// (1/n) sum_{k=0}^{n-1} 1/(1 - z trig^2(k pi / n)) to order K: z^j carries
/// base(j, n)/n.
SeriesCoefficients resolvent_coefficients(TrigKind kind, std::uint32_t n, std::uint32_t K);
/// C(2j, j)/4^j + 2 (2j)! sigma_j(n) / 4^j (sigma^- for sine).
SeriesCoefficients resolvent_closed_coefficients(TrigKind kind, std::uint32_t n, std::uint32_t K);

}  // namespace trigsum

#endif  // TRIGSUM_GENFUNC_HPP_
