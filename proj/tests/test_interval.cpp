// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfsum/interval.hpp"

#include <cmath>

using kfsum::ComplexInterval;
using kfsum::Interval;

TEST_CASE("exact integers stay exact") {
  Interval a(7L, 64);
  CHECK(a.unique_integer() == mpz_class(7));
  CHECK(a.width_double() == 0.0);
  Interval b = a * a - 49L;
  CHECK(b.contains_zero());
  CHECK(b.width_double() == 0.0);
}

TEST_CASE("one third is enclosed but not exact") {
  Interval third(mpq_class(1, 3), 128);
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK(third.width_double() > 0.0);
  CHECK(third.width_double() < 1e-37);
  Interval back = third * 3L;
  CHECK(back.contains(1L));
}

TEST_CASE("sqrt 2 squared encloses 2") {
  Interval r = sqrt(Interval(2L, 200));
  CHECK(sqr(r).contains(2L));
  CHECK(r.unique_floor() == mpz_class(1));
  CHECK(std::abs(r.mid_double() - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("log and exp are inverse on enclosures") {
  Interval x = Interval::from_decimal("2.5", 160);
  Interval y = exp(log(x));
  CHECK(y.contains(mpq_class(5, 2)));
  CHECK(log(Interval(1L, 64)).contains_zero());
  CHECK_THROWS_AS(log(Interval::hull(mpq_class(-1), mpq_class(1), 64)), kfsum::PrecisionError);
}

TEST_CASE("division by an interval through zero is refused") {
  Interval zeroish = Interval::hull(mpq_class(-1, 10), mpq_class(1, 10), 64);
  CHECK_THROWS_AS(Interval(1L, 64) / zeroish, kfsum::PrecisionError);
}

TEST_CASE("directed formatting rounds outward") {
  Interval third(mpq_class(1, 3), 128);
  CHECK(third.upper_fixed(3) == "0.334");
  CHECK(third.lower_fixed(3) == "0.333");
}

TEST_CASE("floor decisions") {
  CHECK(Interval::hull(mpq_class(21, 10), mpq_class(29, 10), 64).unique_floor() == mpz_class(2));
  CHECK_FALSE(Interval::hull(mpq_class(19, 10), mpq_class(21, 10), 64).unique_floor().has_value());
  CHECK(Interval::hull(mpq_class(-21, 10), mpq_class(-19, 10), 64).unique_integer() == mpz_class(-2));
  CHECK_FALSE(Interval::hull(mpq_class(1, 10), mpq_class(9, 10), 64).unique_integer().has_value());
}

TEST_CASE("pow with zero exponent is one") {
  Interval x = Interval::hull(mpq_class(-3), mpq_class(5), 64);
  CHECK(pow(x, 0).unique_integer() == mpz_class(1));
  CHECK(pow(Interval(2L, 64), 10).unique_integer() == mpz_class(1024));
  CHECK(pow(Interval(2L, 64), -2).contains(mpq_class(1, 4)));
  Interval even = pow(Interval::hull(mpq_class(-2), mpq_class(1), 64), 2);
  CHECK(even.certainly_nonnegative());
  CHECK(even.contains(4L));
}

TEST_CASE("complex arithmetic") {
  const mpfr_prec_t p = 128;
  ComplexInterval i(Interval(0L, p), Interval(1L, p));
  ComplexInterval minus_one = i * i;
  CHECK(minus_one.re().contains(-1L));
  CHECK(minus_one.im().contains_zero());
  ComplexInterval z(Interval(3L, p), Interval(4L, p));
  CHECK(z.abs().contains(5L));
  ComplexInterval q = z / z;
  CHECK(q.re().contains(1L));
  CHECK(q.im().contains_zero());
  ComplexInterval z8 = pow(z, 8);
  CHECK(z8.abs().contains(mpz_class(390625)));
}

TEST_CASE("pi and log2 constants") {
  CHECK(std::abs(Interval::pi(128).mid_double() - M_PI) < 1e-15);
  CHECK(std::abs(Interval::log2(128).mid_double() - std::log(2.0)) < 1e-15);
}
