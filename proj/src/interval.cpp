#include "trigsum/interval.hpp"

#include <memory>
#include <utility>

namespace trigsum {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return owned ? std::string(owned.get()) : std::string();
}

// ---------------------------------------------------------------------------

namespace {

using RoundedOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// [min over corners rounded down, max over corners rounded up]
void corner_hull(const Interval& a, const Interval& b, RoundedOp op, BigFloat& lo, BigFloat& hi) {
  const mpfr_prec_t prec = lo.precision();
  const mpfr_srcptr xs[2] = {a.lower().get(), a.upper().get()};
  const mpfr_srcptr ys[2] = {b.lower().get(), b.upper().get()};
  BigFloat down(prec), up(prec);
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      op(down.get(), x, y, MPFR_RNDD);
      op(up.get(), x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), lo.get())) mpfr_set(lo.get(), down.get(), MPFR_RNDD);
      if (first || mpfr_greater_p(up.get(), hi.get())) mpfr_set(hi.get(), up.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

Interval::Interval(mpfr_prec_t precision) : lower_(precision), upper_(precision) {}

Interval Interval::from_rational(const Rational& value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lower_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.upper_.get(), value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::cos_pi(const Integer& num, const Integer& den, mpfr_prec_t precision) {
  if (den == 0) throw DomainError("cos_pi: zero denominator");
  Integer d = abs(den);
  Integer a = abs(num);  // cos is even
  const Integer period = 2 * d;
  a = a % period;
  if (a > d) a = period - a;  // cos(2pi - x) = cos x
  int sign = 1;
  if (2 * a > d) {  // cos(pi - x) = -cos x
    a = d - a;
    sign = -1;
  }

  Interval r(precision);
  if (a == 0) {
    r = from_rational(1, precision);
  } else if (2 * a == d) {
    r = from_rational(0, precision);
  } else if (3 * a == d) {
    r = from_rational(Rational(1, 2), precision);
  } else {
    // theta in (0, pi/2), where cos is decreasing.
    BigFloat theta_lo(precision), theta_hi(precision);
    mpfr_const_pi(theta_lo.get(), MPFR_RNDD);
    mpfr_const_pi(theta_hi.get(), MPFR_RNDU);
    mpfr_mul_z(theta_lo.get(), theta_lo.get(), a.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(theta_hi.get(), theta_hi.get(), a.get_mpz_t(), MPFR_RNDU);
    mpfr_div_z(theta_lo.get(), theta_lo.get(), d.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(theta_hi.get(), theta_hi.get(), d.get_mpz_t(), MPFR_RNDU);
    mpfr_cos(r.lower_.get(), theta_hi.get(), MPFR_RNDD);
    mpfr_cos(r.upper_.get(), theta_lo.get(), MPFR_RNDU);
  }
  return sign < 0 ? r.negated() : r;
}

Interval Interval::sin_pi(const Integer& num, const Integer& den, mpfr_prec_t precision) {
  // sin(x) = cos(pi/2 - x)
  return cos_pi(den - 2 * num, 2 * den, precision);
}

Interval Interval::cot_pi(const Integer& num, const Integer& den, mpfr_prec_t precision) {
  const Interval s = sin_pi(num, den, precision);
  if (s.contains_zero()) throw DomainError("cot_pi: argument is a multiple of pi");
  return cos_pi(num, den, precision) / s;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lower_.get()) <= 0 && mpfr_sgn(upper_.get()) >= 0;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), upper_.get(), lower_.get(), MPFR_RNDU);
  return w;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(precision());
  mpfr_add(r.lower_.get(), lower_.get(), rhs.lower_.get(), MPFR_RNDD);
  mpfr_add(r.upper_.get(), upper_.get(), rhs.upper_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const { return *this + rhs.negated(); }

Interval Interval::operator*(const Interval& rhs) const {
  Interval r(precision());
  corner_hull(*this, rhs, &mpfr_mul, r.lower_, r.upper_);
  return r;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (rhs.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval r(precision());
  corner_hull(*this, rhs, &mpfr_div, r.lower_, r.upper_);
  return r;
}

Interval Interval::scaled(const Rational& factor) const {
  return *this * from_rational(factor, precision());
}

Interval Interval::negated() const {
  Interval r(precision());
  mpfr_neg(r.lower_.get(), upper_.get(), MPFR_RNDD);
  mpfr_neg(r.upper_.get(), lower_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long e) const {
  const mpfr_prec_t prec = precision();
  if (e == 0) return from_rational(1, prec);
  Interval r(prec);
  if (e % 2 == 1 || mpfr_sgn(lower_.get()) >= 0) {
    // monotone increasing in x
    mpfr_pow_ui(r.lower_.get(), lower_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(r.upper_.get(), upper_.get(), e, MPFR_RNDU);
  } else if (mpfr_sgn(upper_.get()) <= 0) {
    mpfr_pow_ui(r.lower_.get(), upper_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(r.upper_.get(), lower_.get(), e, MPFR_RNDU);
  } else {
    BigFloat reach(prec);
    mpfr_neg(reach.get(), lower_.get(), MPFR_RNDU);
    if (mpfr_less_p(reach.get(), upper_.get())) mpfr_set(reach.get(), upper_.get(), MPFR_RNDU);
    mpfr_set_zero(r.lower_.get(), 1);
    mpfr_pow_ui(r.upper_.get(), reach.get(), e, MPFR_RNDU);
  }
  return r;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lower_.get(), lower_.get(), MPFR_RNDD);
  mpfr_exp(r.upper_.get(), upper_.get(), MPFR_RNDU);
  return r;
}

}  // namespace trigsum
