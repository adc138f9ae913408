#include "trigsum/exact.hpp"

#include <algorithm>
#include <limits>

namespace trigsum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational pow2_signed(std::int64_t e) {
  if (e >= 0) return Rational(pow2(static_cast<std::uint64_t>(e)));
  return make_rational(1, pow2(static_cast<std::uint64_t>(-e)));
}

Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return 1 / pow(base, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binom: negative upper index");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r, bool always_fraction) {
  if (!always_fraction && is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer num = abs(r.get_num()) * scale;
  const Integer& den = r.get_den();
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(2 * rem, den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string text = q.get_str();
  if (digits > 0) {
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (r < 0 && q != 0) text.insert(0, "-");
  return text;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)),
                         Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: '" + text + "'");
  }
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

// ---------------------------------------------------------------------------

BernoulliCache::BernoulliCache() { table_.emplace_back(1); }

void BernoulliCache::extend_locked(std::uint32_t index) {
  // sum_{k=0}^{n} C(n+1, k) B_k = 0  =>  B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k
  while (table_.size() <= index) {
    const auto n = static_cast<std::int64_t>(table_.size());
    if (n >= 3 && n % 2 == 1) {
      table_.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      if (table_[k] != 0) acc += Rational(binom(n + 1, k)) * table_[k];
    }
    table_.push_back(-acc / (n + 1));
  }
}

Rational BernoulliCache::get(std::uint32_t index) {
  if (index % 2 != 0) {
    throw DomainError("bernoulli: only even indices are served, got " +
                      std::to_string(index));
  }
  std::lock_guard lock(mutex_);
  extend_locked(index);
  return table_[index];
}

void BernoulliCache::reserve_through(std::uint32_t index) {
  std::lock_guard lock(mutex_);
  extend_locked(index);
}

std::size_t BernoulliCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

Rational bernoulli(std::uint32_t index) {
  static BernoulliCache cache;
  return cache.get(index);
}

// ---------------------------------------------------------------------------

Compositions::Compositions(std::uint32_t total, std::uint32_t parts)
    : total_(total), parts_(parts) {
  if (parts == 0) throw DomainError("compositions: need at least one part");
}

Integer Compositions::count() const {
  return binom(static_cast<std::int64_t>(total_) + parts_ - 1, parts_ - 1);
}

Compositions::iterator::iterator(std::uint32_t total, std::uint32_t parts)
    : done_(false) {
  current_.total = total;
  current_.parts.assign(parts, 0);
  current_.parts[0] = total;
}

Compositions::iterator& Compositions::iterator::operator++() {
  auto& c = current_.parts;
  const auto first = std::find_if(c.begin(), c.end(), [](auto v) { return v != 0; });
  if (first == c.end() || first + 1 == c.end()) {
    done_ = true;
    return *this;
  }
  const std::uint32_t carried = *first;
  *first = 0;
  *(first + 1) += 1;
  c.front() = carried - 1;
  return *this;
}

// ---------------------------------------------------------------------------

Rational evaluate(const RationalPolynomial& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void trim(RationalPolynomial& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

RationalPolynomial interpolate(std::span<const Rational> xs,
                               std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: length mismatch");
  const std::size_t n = xs.size();

  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx == 0) throw DomainError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }

  RationalPolynomial poly;
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (x - xs[i]) + dd[i]
    RationalPolynomial next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  trim(poly);
  return poly;
}

}  // namespace trigsum
