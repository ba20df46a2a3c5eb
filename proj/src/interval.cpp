// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace kfsum {

namespace {

mpfr_prec_t joint_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

// RAII scratch value.
struct Scratch {
  explicit Scratch(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

std::string format_with(const char* fmt, int decimals, mpfr_srcptr x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt, decimals, x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::~Interval() {
  if (lo_->_mpfr_d != nullptr) mpfr_clear(lo_);
  if (hi_->_mpfr_d != nullptr) mpfr_clear(hi_);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  // Steal the limbs; leave `other` in a destructible empty state.
  *lo_ = *other.lo_;
  *hi_ = *other.hi_;
  other.lo_->_mpfr_d = nullptr;
  other.hi_->_mpfr_d = nullptr;
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  if (lo_->_mpfr_d == nullptr) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this == &other) return *this;
  std::swap(*lo_, *other.lo_);
  std::swap(*hi_, *other.hi_);
  return *this;
}

void Interval::reset_precision(mpfr_prec_t prec) {
  if (precision() == prec) return;
  mpfr_prec_round(lo_, prec, MPFR_RNDD);
  mpfr_prec_round(hi_, prec, MPFR_RNDU);
}

Interval Interval::hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  if (mpfr_cmp(out.lo_, out.hi_) > 0) throw std::invalid_argument("Interval::hull: lo > hi");
  return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval out(joint_prec(a, b));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec_t prec) {
  Interval out(prec);
  if (mpfr_set_str(out.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(out.hi_, text.c_str(), 10, MPFR_RNDU) != 0) {
    throw std::invalid_argument("Interval::from_decimal: cannot parse '" + text + "'");
  }
  return out;
}

Interval Interval::point(mpfr_srcptr value) {
  Interval out(mpfr_get_prec(value));
  mpfr_set(out.lo_, value, MPFR_RNDD);
  mpfr_set(out.hi_, value, MPFR_RNDU);
  return out;
}

Interval Interval::around(mpfr_srcptr center, mpfr_srcptr radius, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_sub(out.lo_, center, radius, MPFR_RNDD);
  mpfr_add(out.hi_, center, radius, MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::log2(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_log2(out.lo_, MPFR_RNDD);
  mpfr_const_log2(out.hi_, MPFR_RNDU);
  return out;
}

double Interval::mid_double() const {
  Scratch m(precision() + 1);
  midpoint(m.v);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

Interval Interval::width() const {
  Interval out(precision());
  mpfr_sub(out.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, lo_, MPFR_RNDU);
  return out;
}

double Interval::width_double() const { return width().upper_double(); }

void Interval::midpoint(mpfr_ptr out) const {
  mpfr_add(out, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

bool Interval::contains(long value) const {
  return mpfr_cmp_si(lo_, value) <= 0 && mpfr_cmp_si(hi_, value) >= 0;
}

bool Interval::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lo_, value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, value.get_mpz_t()) >= 0;
}

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool Interval::subset_of(const Interval& other) const {
  return mpfr_cmp(other.lo_, lo_) <= 0 && mpfr_cmp(hi_, other.hi_) <= 0;
}

bool Interval::certainly_less(const Interval& other) const { return mpfr_cmp(hi_, other.lo_) < 0; }

bool Interval::certainly_less_equal(const Interval& other) const {
  return mpfr_cmp(hi_, other.lo_) <= 0;
}

std::optional<mpz_class> Interval::unique_floor() const {
  mpz_class a;
  mpz_class b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

std::optional<mpz_class> Interval::unique_integer() const {
  mpz_class a;
  mpz_class b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

mpq_class Interval::lower_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class Interval::upper_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

std::string Interval::upper_fixed(int decimals) const { return format_with("%.*RUf", decimals, hi_); }

std::string Interval::lower_fixed(int decimals) const { return format_with("%.*RDf", decimals, lo_); }

std::string Interval::to_string(int digits) const {
  return "[" + format_with("%.*RDe", digits, lo_) + ", " + format_with("%.*RUe", digits, hi_) + "]";
}

Interval& Interval::operator+=(const Interval& rhs) {
  reset_precision(joint_prec(*this, rhs));
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  reset_precision(joint_prec(*this, rhs));
  Scratch t(precision());
  mpfr_sub(t.v, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t.v);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const mpfr_prec_t prec = joint_prec(*this, rhs);
  Scratch d(prec);
  Scratch u(prec);
  Scratch lo(prec);
  Scratch hi(prec);
  mpfr_srcptr as[2] = {lo_, hi_};
  mpfr_srcptr bs[2] = {rhs.lo_, rhs.hi_};
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto* a : as) {
    for (auto* b : bs) {
      mpfr_mul(d.v, a, b, MPFR_RNDD);
      mpfr_mul(u.v, a, b, MPFR_RNDU);
      if (mpfr_cmp(d.v, lo.v) < 0) mpfr_set(lo.v, d.v, MPFR_RNDD);
      if (mpfr_cmp(u.v, hi.v) > 0) mpfr_set(hi.v, u.v, MPFR_RNDU);
    }
  }
  reset_precision(prec);
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw PrecisionError("Interval division: divisor encloses zero");
  const mpfr_prec_t prec = joint_prec(*this, rhs);
  Interval inv(prec);
  mpfr_ui_div(inv.lo_, 1, rhs.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, rhs.lo_, MPFR_RNDU);
  return *this *= inv;
}

Interval operator-(const Interval& a) {
  Interval out(a.precision());
  mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, long b) { return a * Interval(b, a.precision()); }

Interval operator*(const Interval& a, const mpz_class& b) {
  Interval out(a.precision());
  if (b >= 0) {
    mpfr_mul_z(out.lo_, a.lo_, b.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(out.hi_, a.hi_, b.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(out.lo_, a.hi_, b.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(out.hi_, a.lo_, b.get_mpz_t(), MPFR_RNDU);
  }
  return out;
}

Interval operator/(const Interval& a, long b) { return a / Interval(b, a.precision()); }

Interval operator+(const Interval& a, long b) { return a + Interval(b, a.precision()); }

Interval operator-(const Interval& a, long b) { return a - Interval(b, a.precision()); }

Interval operator-(long a, const Interval& b) { return Interval(a, b.precision()) - b; }

Interval operator-(const Interval& a, const mpz_class& b) {
  Interval out(a.precision());
  mpfr_sub_z(out.lo_, a.lo_, b.get_mpz_t(), MPFR_RNDD);
  mpfr_sub_z(out.hi_, a.hi_, b.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval abs(const Interval& x) {
  if (x.certainly_nonnegative()) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Interval out(x.precision());
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, x.lo_, MPFR_RNDU);
  if (mpfr_cmp(x.hi_, out.hi_) > 0) mpfr_set(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval sqr(const Interval& x) {
  Interval a = abs(x);
  Interval out(x.precision());
  mpfr_sqr(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqr(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_) < 0) throw std::domain_error("sqrt of a negative interval");
  Interval out(x.precision());
  if (mpfr_sgn(x.lo_) < 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval log(const Interval& x) {
  if (!x.certainly_positive()) {
    if (mpfr_sgn(x.hi_) > 0) throw PrecisionError("log: enclosure reaches zero");
    throw std::domain_error("log of a non-positive interval");
  }
  Interval out(x.precision());
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval log1p(const Interval& x) {
  if (mpfr_cmp_si(x.lo_, -1) <= 0) throw PrecisionError("log1p: enclosure reaches -1");
  Interval out(x.precision());
  mpfr_log1p(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log1p(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out(x.precision());
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, long exponent) {
  const mpfr_prec_t prec = x.precision();
  if (exponent == 0) return Interval(1L, prec);
  if (exponent < 0) {
    if (x.contains_zero()) throw PrecisionError("pow: negative exponent of an interval containing zero");
    return Interval(1L, prec) / pow(x, -exponent);
  }
  const auto n = static_cast<unsigned long>(exponent);
  Interval out(prec);
  if (n % 2 == 1 || x.certainly_nonnegative()) {
    // monotone increasing
    mpfr_pow_ui(out.lo_, x.lo_, n, MPFR_RNDD);
    mpfr_pow_ui(out.hi_, x.hi_, n, MPFR_RNDU);
    return out;
  }
  Interval a = abs(x);
  mpfr_pow_ui(out.lo_, a.lo_, n, MPFR_RNDD);
  mpfr_pow_ui(out.hi_, a.hi_, n, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval min_with(const Interval& a, const Interval& b) {
  Interval out(joint_prec(a, b));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval max_with(const Interval& a, const Interval& b) {
  Interval out(joint_prec(a, b));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval ComplexInterval::abs_squared() const { return sqr(re_) + sqr(im_); }

Interval ComplexInterval::abs() const { return sqrt(abs_squared()); }

bool ComplexInterval::disjoint_from(const ComplexInterval& other) const {
  auto apart = [](const Interval& a, const Interval& b) {
    return a.certainly_less(b) || b.certainly_less(a);
  };
  return apart(re_, other.re_) || apart(im_, other.im_);
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& rhs) {
  Interval re = re_ * rhs.re_ - im_ * rhs.im_;
  Interval im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexInterval& ComplexInterval::operator/=(const ComplexInterval& rhs) {
  Interval den = rhs.abs_squared();
  Interval re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  Interval im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexInterval operator*(const ComplexInterval& a, const Interval& b) {
  return ComplexInterval(a.re_ * b, a.im_ * b);
}

ComplexInterval operator+(const ComplexInterval& a, const Interval& b) {
  return ComplexInterval(a.re_ + b, a.im_);
}

ComplexInterval pow(const ComplexInterval& z, long exponent) {
  const mpfr_prec_t prec = z.precision();
  ComplexInterval one(Interval(1L, prec), Interval(0L, prec));
  if (exponent < 0) return one / pow(z, -exponent);
  ComplexInterval result = one;
  ComplexInterval base = z;
  auto n = static_cast<unsigned long>(exponent);
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

}  // namespace kfsum
