// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Closed real intervals with MPFR endpoints and outward (directed) rounding,
// plus rectangular complex intervals built on top of them.
//
// Every operation returns an enclosure of the exact result: lower endpoints
// are computed with MPFR_RNDD, upper endpoints with MPFR_RNDU. Decisions
// (sign, comparison, floor) are only reported as certain when the
// enclosure itself decides them.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace kfsum {

/// Thrown when an enclosure is too wide to decide something the caller
/// asked for. Callers typically retry with more precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary precision needed to carry `digits` decimal digits.
mpfr_prec_t bits_for_digits(long digits);

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(long value, mpfr_prec_t prec);
  Interval(const mpz_class& value, mpfr_prec_t prec);
  Interval(const mpq_class& value, mpfr_prec_t prec);
  ~Interval();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;

  /// Interval [lo, hi] from two exact rationals (rounded outward).
  static Interval hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
  static Interval hull(const Interval& a, const Interval& b);
  /// Enclosure of a decimal literal such as "6.66e27" or "0.16".
  static Interval from_decimal(const std::string& text, mpfr_prec_t prec);
  /// Degenerate interval [v, v] (exact at the precision of v).
  static Interval point(mpfr_srcptr value);
  /// [center - radius, center + radius], rounded outward.
  static Interval around(mpfr_srcptr center, mpfr_srcptr radius, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval log2(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;

  /// Upper bound on hi - lo.
  Interval width() const;
  double width_double() const;
  /// Midpoint rounded to nearest; not an enclosure of anything in particular.
  void midpoint(mpfr_ptr out) const;

  bool contains(long value) const;
  bool contains(const mpz_class& value) const;
  bool contains(const mpq_class& value) const;
  bool contains_zero() const { return contains(0L); }
  bool subset_of(const Interval& other) const;

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  /// True iff every point of *this is < every point of other.
  bool certainly_less(const Interval& other) const;
  bool certainly_less_equal(const Interval& other) const;
  bool certainly_less(long value) const { return mpfr_cmp_si(hi_, value) < 0; }
  bool certainly_greater(long value) const { return mpfr_cmp_si(lo_, value) > 0; }

  /// floor(x) if it is the same integer for every x in the enclosure.
  std::optional<mpz_class> unique_floor() const;
  /// The single integer contained in the enclosure, if exactly one is.
  std::optional<mpz_class> unique_integer() const;
  /// Exact rational value of each endpoint.
  mpq_class lower_rational() const;
  mpq_class upper_rational() const;

  /// Decimal rendering of the upper endpoint, rounded up, with `decimals`
  /// digits after the point.
  std::string upper_fixed(int decimals) const;
  std::string lower_fixed(int decimals) const;
  std::string to_string(int digits = 20) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a);

  friend Interval operator*(const Interval& a, long b);
  friend Interval operator*(const Interval& a, const mpz_class& b);
  friend Interval operator/(const Interval& a, long b);
  friend Interval operator+(const Interval& a, long b);
  friend Interval operator-(const Interval& a, long b);
  friend Interval operator-(long a, const Interval& b);
  friend Interval operator-(const Interval& a, const mpz_class& b);

  friend Interval abs(const Interval& x);
  friend Interval sqr(const Interval& x);
  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval log1p(const Interval& x);
  friend Interval exp(const Interval& x);
  /// Integer power; exponent 0 gives exactly 1.
  friend Interval pow(const Interval& x, long exponent);
  /// Real power x^y for x > 0.
  friend Interval pow(const Interval& x, const Interval& y);
  friend Interval min_with(const Interval& a, const Interval& b);
  friend Interval max_with(const Interval& a, const Interval& b);

 private:
  void reset_precision(mpfr_prec_t prec);

  mpfr_t lo_;
  mpfr_t hi_;
};

/// Rectangular complex interval re + i*im.
class ComplexInterval {
 public:
  explicit ComplexInterval(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  /// Enclosure of |z|.
  Interval abs() const;
  Interval abs_squared() const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool disjoint_from(const ComplexInterval& other) const;

  ComplexInterval& operator+=(const ComplexInterval& rhs);
  ComplexInterval& operator-=(const ComplexInterval& rhs);
  ComplexInterval& operator*=(const ComplexInterval& rhs);
  ComplexInterval& operator/=(const ComplexInterval& rhs);

  friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
  friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
  friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }
  friend ComplexInterval operator/(ComplexInterval a, const ComplexInterval& b) { return a /= b; }
  friend ComplexInterval operator*(const ComplexInterval& a, const Interval& b);
  friend ComplexInterval operator+(const ComplexInterval& a, const Interval& b);
  friend ComplexInterval pow(const ComplexInterval& z, long exponent);

 private:
  Interval re_;
  Interval im_;
};

}  // namespace kfsum
