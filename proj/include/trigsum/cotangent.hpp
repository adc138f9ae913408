// Even powers of the cotangent at rational multiples of pi.
//
//   sum_{r=1}^{k-1} cot^{2n}(r pi / k)                       (multi-index Bernoulli form)
//   sum_{r=1}^{k}   cot^{2n}((r - 1/2) pi / 2k)              (Byrne-Smith form)

#ifndef TRIGSUM_COTANGENT_HPP_
#define TRIGSUM_COTANGENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigsum/exact.hpp"

namespace trigsum {

struct CotSumParams {
  std::uint32_t n = 1;  // half the exponent
  std::uint32_t k = 2;  // angle denominator, >= 2
};

/// sum_{r=1}^{k-1} cot^{2n}(r pi / k), evaluated as
///
///   k [ (-1)^n - (-1)^n 2^{2n} sum_J k^{2 j_d - 1} prod_{i=0}^{2n} B_{2 j_i} / (2 j_i)! ]
///
/// where J runs over all compositions (j_0, ..., j_{2n}) of n into 2n+1
/// non-negative parts. The product is symmetric in the parts, so the slot
/// `distinguished` that carries the power of k may be any of 0..2n; slot 0
/// is the dependent index n - (j_1 + ... + j_{2n}). Defaults to 2n.
///
/// Requires n >= 1 and k >= 2.
Rational cot_power_sum(std::uint32_t n, std::uint32_t k,
                       std::optional<std::size_t> distinguished = std::nullopt);

/// The older statement of the same formula with every index restricted to be
/// positive. Taken literally the index set is empty and the result collapses
/// to (-1)^n k, which is wrong for every k >= 2. Kept only as a
/// counterexample generator.
Rational cot_power_sum_positive_indices(std::uint32_t n, std::uint32_t k);

/// Degree-2n polynomial P with P(k) = cot_power_sum(n, k) for all k >= 2.
struct CotPolynomial {
  std::uint32_t n = 0;
  RationalPolynomial coefficients;  // coefficients[j] multiplies k^j

  Rational operator()(const Rational& k) const { return evaluate(coefficients, k); }
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  /// Least common multiple of the coefficient denominators.
  Integer common_denominator() const;
};

/// Interpolates cot_power_sum(n, .) through k = 2..2n+3 and checks three
/// further points; throws std::logic_error if the check fails.
CotPolynomial cot_sum_polynomial(std::uint32_t n);

/// Triangular table b[n][j], 1 <= j <= n <= n_max.
class ByrneSmithCoefficients {
 public:
  explicit ByrneSmithCoefficients(std::uint32_t n_max);

  std::uint32_t n_max() const { return n_max_; }
  const Rational& at(std::uint32_t n, std::uint32_t j) const;
  Rational& at(std::uint32_t n, std::uint32_t j);
  /// sum_j b[n][j]
  Rational row_sum(std::uint32_t n) const;

 private:
  std::uint32_t n_max_;
  std::vector<std::vector<Rational>> rows_;
};

/// For j < n:
///   b[n][j] = 1/(2^{2(n-j)} - 1) sum_{l=1}^{n-j} (-1)^l C(2n, l) b[n-l][j]
/// and b[n][n] closes the row so that sum_j b[n][j] = 1 + (-1)^{n-1}.
ByrneSmithCoefficients byrne_smith_coefficients(std::uint32_t n_max);

/// (-1)^n k + sum_{j=1}^{n} b[n][j] k^{2j}. Requires n >= 1, k >= 1.
Rational byrne_smith_sum(std::uint32_t n, std::uint32_t k);

/// The recursion as commonly transcribed, with denominator 2^{2(n-j)-1}.
ByrneSmithCoefficients byrne_smith_coefficients_transcribed(std::uint32_t n_max);

/// The sum as commonly transcribed: (-1)^k k plus the transcribed table.
/// Disagrees with the true sum already at n = 1, k = 2 (10 versus 6).
Rational byrne_smith_sum_transcribed(std::uint32_t n, std::uint32_t k);

}  // namespace trigsum

#endif  // TRIGSUM_COTANGENT_HPP_
