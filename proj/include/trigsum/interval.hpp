// Outward-rounded interval arithmetic on MPFR numbers, just enough to bound
// finite sums of trigonometric powers at rational multiples of pi.

#ifndef TRIGSUM_INTERVAL_HPP_
#define TRIGSUM_INTERVAL_HPP_

#include <string>

#include <mpfr.h>

#include "trigsum/exact.hpp"

namespace trigsum {

/// Owning wrapper around mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

/// A closed interval [lower, upper] known to contain some real value.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);

  /// Degenerate interval if `value` is representable, else its enclosure.
  static Interval from_rational(const Rational& value, mpfr_prec_t precision);

  /// Enclosures of cos, sin and cot of (num/den) pi. Quadrant reduction is
  /// exact, so cos(0), cos(pi/2), cos(pi) and friends come out as points.
  static Interval cos_pi(const Integer& num, const Integer& den, mpfr_prec_t precision);
  static Interval sin_pi(const Integer& num, const Integer& den, mpfr_prec_t precision);
  static Interval cot_pi(const Integer& num, const Integer& den, mpfr_prec_t precision);

  const BigFloat& lower() const { return lower_; }
  const BigFloat& upper() const { return upper_; }
  mpfr_prec_t precision() const { return lower_.precision(); }

  bool contains_zero() const;
  /// upper - lower, rounded up.
  BigFloat width() const;

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;
  Interval& operator+=(const Interval& rhs) { return *this = *this + rhs; }
  Interval& operator*=(const Interval& rhs) { return *this = *this * rhs; }

  Interval scaled(const Rational& factor) const;
  Interval negated() const;

  /// x^e with 0^0 = 1. Tight for even e across zero.
  Interval pow(unsigned long e) const;
  Interval exp() const;

 private:
  BigFloat lower_;
  BigFloat upper_;
};

}  // namespace trigsum

#endif  // TRIGSUM_INTERVAL_HPP_
