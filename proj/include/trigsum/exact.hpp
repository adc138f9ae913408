// Exact arithmetic substrate: big integers, normalized rationals, binomial
// coefficients, Bernoulli numbers and integer compositions.

#ifndef TRIGSUM_EXACT_HPP_
#define TRIGSUM_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trigsum/errors.hpp"

namespace trigsum {

using Integer = mpz_class;

// mpq_class arithmetic always yields canonical fractions; the only way to
// build a non-canonical one is the two-argument constructor, so every
// construction from a raw numerator/denominator pair goes through
// make_rational().
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// 2^e as an exact integer.
Integer pow2(std::uint64_t e);

/// 2^e for possibly negative e, as an exact rational.
Rational pow2_signed(std::int64_t e);

/// Integer power of a rational, negative exponents allowed for non-zero base.
Rational pow(const Rational& base, std::int64_t e);

Integer factorial(std::uint64_t n);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binom(std::int64_t n, std::int64_t k);

bool is_integer(const Rational& r);

/// "p/q", or just "p" when q == 1 and `always_fraction` is false.
std::string to_string(const Rational& r, bool always_fraction = false);

/// Decimal rendering with `digits` places after the point, rounded half to
/// even from the exact value.
std::string to_decimal(const Rational& r, unsigned digits);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

Integer lcm_of_denominators(std::span<const Rational> values);

// ---------------------------------------------------------------------------
// Bernoulli numbers.

/// Memoized Bernoulli numbers, B_1 = -1/2 convention internally.
///
/// Only even indices are served. Growth is append-only under a mutex, so a
/// single cache may be shared by concurrent evaluators; values already
/// handed out never change.
class BernoulliCache {
 public:
  BernoulliCache();

  /// B_index for even index. Throws DomainError for odd index.
  Rational get(std::uint32_t index);

  /// Eagerly extends the table through `index`.
  void reserve_through(std::uint32_t index);

  std::size_t size() const;

 private:
  void extend_locked(std::uint32_t index);

  mutable std::mutex mutex_;
  std::vector<Rational> table_;  // every index, odd ones included
};

/// B_index from the process-wide cache.
Rational bernoulli(std::uint32_t index);

// ---------------------------------------------------------------------------
// Compositions.

struct Composition {
  std::vector<std::uint32_t> parts;
  std::uint32_t total = 0;
};

/// All sequences of `parts` non-negative integers summing to `total`, in
/// colexicographic order: (total,0,...,0) first, (0,...,0,total) last.
class Compositions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    friend class Compositions;
    iterator(std::uint32_t total, std::uint32_t parts);

    Composition current_;
    bool done_ = true;
  };

  /// Requires parts >= 1.
  Compositions(std::uint32_t total, std::uint32_t parts);

  iterator begin() const { return iterator(total_, parts_); }
  iterator end() const { return iterator(); }

  /// C(total + parts - 1, parts - 1).
  Integer count() const;

 private:
  std::uint32_t total_;
  std::uint32_t parts_;
};

inline Compositions compositions(std::uint32_t total, std::uint32_t parts) {
  return Compositions(total, parts);
}

// ---------------------------------------------------------------------------
// Polynomials over the rationals.

/// Coefficients in increasing degree.
using RationalPolynomial = std::vector<Rational>;

Rational evaluate(const RationalPolynomial& poly, const Rational& x);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Requires distinct abscissae and equal lengths.
RationalPolynomial interpolate(std::span<const Rational> xs,
                               std::span<const Rational> ys);

/// Drops trailing zero coefficients.
void trim(RationalPolynomial& poly);

}  // namespace trigsum

#endif  // TRIGSUM_EXACT_HPP_
