// Case tables and single-branch formulas exactly as they appear in the
// literature, kept beside the composed closed forms so their agreement or
// disagreement can be asserted. Several of these are known to be wrong;
// nothing else in the library calls them.

#ifndef TRIGSUM_TRANSCRIBED_HPP_
#define TRIGSUM_TRANSCRIBED_HPP_

#include <cstdint>

#include "trigsum/closed_forms.hpp"

namespace trigsum::transcribed {

/// Three-case table for sum_{k=0}^{2n-1} (-1)^k trig^{2m}(k pi / 2n),
/// split at m < n, n <= m < 2n, m >= 2n. The middle branch as printed is
/// missing the factor n (and, for sine, the sign (-1)^{pn}).
Rational alternating_case_table(TrigKind kind, std::uint32_t m, std::uint32_t n);

/// Explicit three-case tables for the cos(2k pi/3)-weighted sums, split at
/// m < n, n <= m < 3n, m >= 3n. These agree with weight3_sum.
Rational weight3_case_table(TrigKind kind, std::uint32_t m, std::uint32_t n);

/// Five-case table for the cos(k pi/3)-weighted cosine sum (n even), split
/// at n/2, n, 3n/2 and 3n.
Rational weight_pi3_case_table(std::uint32_t m, std::uint32_t n);

/// Three-case table for sum_{k=0}^{3n-1} (-1)^k cos^{2m}(k pi / 3n), n even,
/// with the half-integer step 3n/2.
Rational alternating_third_case_table(std::uint32_t m, std::uint32_t n);

/// (n + 3/2) C(2m, m) - 2^{2m-1} without the tail that switches on at
/// m >= 2n+3. Requires m >= 1.
Rational barbero_single_branch(std::uint32_t m, std::uint32_t n);

}  // namespace trigsum::transcribed

#endif  // TRIGSUM_TRANSCRIBED_HPP_
