// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfsum/algebraic.hpp"

#include <cmath>
#include <random>

using namespace kfsum;

namespace {

// Bisection oracle in long double on x^k - x^{k-1} - ... - 1.
long double bisect_root(int k) {
  long double lo = 1.0L;
  long double hi = 2.0L;
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    long double p = 1;
    for (int j = 0; j < k; ++j) p = p * mid - 1;
    (p < 0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("char poly shape") {
  CharPoly c = CharPoly::of(4);
  CHECK(c.coefficients == IntPoly{-1, -1, -1, -1, 1});
  CHECK_THROWS(CharPoly::of(1));
}

TEST_CASE("dominant root examples") {
  RootContext c2 = dominant_root(2, 30);
  Interval phi = (sqrt(Interval(5L, 300)) + 1L) / 2L;
  CHECK_FALSE(c2.alpha.certainly_less(phi));
  CHECK_FALSE(phi.certainly_less(c2.alpha));
  CHECK(c2.alpha.width().certainly_less(Interval::from_decimal("1e-30", 200)));

  RootContext c3 = dominant_root(3, 30);
  CHECK(std::fabs(c3.alpha.mid_double() - 1.839286755214161) < 1e-14);

  RootContext c10 = dominant_root(10, 30);
  CHECK(Interval::from_decimal("1.998046875", 200).certainly_less(c10.alpha));
  CHECK(c10.alpha.certainly_less(2L));
  CHECK_THROWS_AS(dominant_root(1, 30), std::invalid_argument);
}

TEST_CASE("dominant root matches bisection and is monotone in k") {
  Interval previous(1L, 64);
  for (int k = 2; k <= 100; ++k) {
    RootContext c = dominant_root(k, 40);
    CHECK(std::fabs(static_cast<double>(c.alpha.mid_double() - bisect_root(k))) < 1e-15);
    CHECK(previous.certainly_less(c.alpha));
    previous = c.alpha;
  }
}

TEST_CASE("digit round trip re-certifies") {
  RootContext c = dominant_root(7, 80);
  std::string digits = alpha_digits(c, 80);
  RootContext back = dominant_root_from_digits(7, 80, digits);
  CHECK(back.alpha.mid_double() == doctest::Approx(c.alpha.mid_double()));
  std::string wrong = digits;
  wrong[5] = wrong[5] == '9' ? '0' : static_cast<char>(wrong[5] + 1);
  CHECK_THROWS_AS(dominant_root_from_digits(7, 80, wrong), PrecisionError);
}

TEST_CASE("f_k values") {
  RootContext c2 = conjugate_roots(2, 40);
  CHECK(c2.f_alpha.mid_double() == doctest::Approx(0.72360679).epsilon(1e-8));
  REQUIRE(c2.conjugates.size() == 1);
  CHECK(c2.conjugates[0].re().mid_double() == doctest::Approx(-0.6180339887).epsilon(1e-9));
  CHECK(c2.f_conjugates[0].re().mid_double() == doctest::Approx(0.2763932).epsilon(1e-6));
  for (int k = 2; k <= 9; ++k) CHECK(f_k_eval(k, Interval(2L, 64)).contains(mpq_class(1, 2)));
}

TEST_CASE("conjugate roots: moduli, trace and product of f_k") {
  for (int k = 2; k <= 60; ++k) {
    RootContext c = conjugate_roots(k, 40);
    REQUIRE(c.conjugates.size() == static_cast<std::size_t>(k - 1));
    const mpfr_prec_t p = c.bits();
    ComplexInterval trace(c.alpha, Interval(0L, p));
    Interval product = c.f_alpha;
    for (std::size_t i = 0; i < c.conjugates.size(); ++i) {
      CHECK(c.conjugates[i].abs().certainly_less(1L));
      CHECK(c.f_conjugates[i].abs().certainly_less(1L));
      trace += c.conjugates[i];
      product *= c.f_conjugates[i].abs();
    }
    CHECK(trace.re().contains(1L));
    CHECK(trace.im().contains_zero());
    CHECK(product.certainly_positive());
    CHECK(product.certainly_less(1L));
    CHECK(Interval(mpq_class(1, 2), p).certainly_less(c.f_alpha));
    CHECK(c.f_alpha.certainly_less(Interval(mpq_class(3, 4), p)));
    // f_k decreases across the bracket
    Interval left = Interval(2L, p) - pow(Interval(2L, p), 1 - k);
    CHECK(c.f_alpha.certainly_less(f_k_eval(k, left)));
    CHECK(Interval(mpq_class(1, 2), p).certainly_less(c.f_alpha));
  }
}

TEST_CASE("k = 3 conjugate modulus") {
  RootContext c = conjugate_roots(3, 40);
  for (const auto& z : c.conjugates) {
    CHECK(z.abs().mid_double() == doctest::Approx(0.7373527).epsilon(1e-6));
    // direct polynomial evaluation oracle
    CHECK(evaluate(CharPoly::of(3).coefficients, z).contains_zero());
  }
}

TEST_CASE("binet dominant term") {
  RootContext c3 = dominant_root(3, 40);
  CHECK(binet_dominant(c3, 8, generate(3, 8)).mid_double() == doctest::Approx(44).epsilon(0.02));
  RootContext c2 = dominant_root(2, 40);
  CHECK_NOTHROW(binet_dominant(c2, 1, generate(2, 1)));
  RootContext c5 = dominant_root(5, 40);
  CHECK_NOTHROW(binet_dominant(c5, 40, generate(5, 40)));
  for (int k = 2; k <= 10; ++k) {
    RootContext c = dominant_root(k, 80);
    KFibTable t = generate(k, 200);
    for (long n = 2 - k; n <= 200; ++n) CHECK_NOTHROW(binet_dominant(c, n, t));
  }
}

TEST_CASE("binet full formula reconstructs the table") {
  CHECK(binet_full(conjugate_roots(3, 40), 9).unique_integer() == mpz_class(81));
  CHECK(binet_full(conjugate_roots(3, 40), 10).unique_integer() == mpz_class(149));
  CHECK(binet_full(conjugate_roots(2, 40), 2).unique_integer() == mpz_class(1));
  RootContext c7 = conjugate_roots(7, 40);
  CHECK(binet_full(c7, 25).unique_integer() == generate(7, 25)[25]);
  for (int k = 2; k <= 10; ++k) {
    RootContext c = conjugate_roots(k, 120);
    KFibTable t = generate(k, 200);
    for (long n = 2; n <= 200; ++n) REQUIRE(binet_full(c, n).unique_integer() == t[n]);
  }
}

TEST_CASE("alpha powers bracket the terms") {
  for (int k = 2; k <= 20; ++k) {
    RootContext c = dominant_root(k, 160);
    KFibTable t = generate(k, 400);
    for (long n = 1; n <= 400; ++n) {
      Interval v(t[n], c.bits());
      CHECK(pow(c.alpha, n - 2).certainly_less_equal(v));
      CHECK(v.certainly_less_equal(pow(c.alpha, n - 1)));
    }
  }
}

TEST_CASE("delta eta decomposition") {
  DeltaEtaDecomposition a = delta_eta_decompose(dominant_root(20, 60), 100);
  CHECK(a.certified());
  DeltaEtaDecomposition b = delta_eta_decompose(dominant_root(10, 40), 2);
  CHECK(b.certified());
  CHECK(b.delta.certainly_negative());
  DeltaEtaDecomposition c = delta_eta_decompose(dominant_root(30, 400), 1000);
  CHECK(c.recomposition_encloses_zero());
  CHECK(c.certified());
  CHECK_THROWS_AS(delta_eta_decompose(dominant_root(10, 40), 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_eta_decompose(dominant_root(10, 40), 34), std::invalid_argument);

  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    const int k = 4 + static_cast<int>(rng() % 57);
    const long cap = std::min<long>(5000L, static_cast<long>(std::ceil(std::sqrt(std::ldexp(1.0, k)))));
    long r = 2 + static_cast<long>(rng() % static_cast<unsigned long>(cap));
    while (mpz_class(r - 1) * (r - 1) >= power_of_two(static_cast<unsigned long>(k))) --r;
    if (r < 2) continue;
    const long digits = 40 + k;
    REQUIRE(delta_eta_decompose(dominant_root(k, digits), r).certified());
  }
}

TEST_CASE("heights") {
  CHECK(log(Interval(2L, 128)).subset_of(height_rational(2, 1)));
  CHECK(height_rational(0, 1).contains_zero());
  CHECK(height_rational(-7, 3).mid_double() == doctest::Approx(std::log(7.0)));
  CHECK_THROWS_AS(height_rational(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(height_rational(2, -1), std::invalid_argument);

  HeightReport h2 = height_f_k(conjugate_roots(2, 40));
  CHECK(h2.minimal_polynomial == IntPoly{1, -5, 5});
  CHECK(h2.height.mid_double() == doctest::Approx(std::log(5.0) / 2));
  CHECK(h2.below_bound());

  for (int k = 2; k <= 15; ++k) {
    RootContext c = conjugate_roots(k, 40);
    HeightReport h = height_f_k(c);
    CHECK(degree(h.minimal_polynomial) == k);
    CHECK(h.below_bound());
    Interval ha = height_alpha(c);
    CHECK(ha.mid_double() == doctest::Approx(std::log(c.alpha.mid_double()) / k));
  }
  CHECK_THROWS_AS(height_f_k(conjugate_roots(16, 40)), std::invalid_argument);
}
