// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfsum/matveev.hpp"

#include <cmath>
#include <random>

using namespace kfsum;

namespace {

Interval dec(const char* s) { return Interval::from_decimal(s, 192); }
Interval lng(long v) { return Interval(v, 192); }

LinearFormInstance instance(int t, int D, Interval B, std::vector<Interval> A) {
  LinearFormInstance inst;
  inst.t = t;
  inst.D = D;
  inst.B = std::move(B);
  inst.A = std::move(A);
  return inst;
}

}  // namespace

TEST_CASE("matveev exponent: smallest instance") {
  Interval e = matveev_exponent(instance(1, 1, lng(1), {dec("0.16")}));
  CHECK(e.mid_double() == doctest::Approx(1.4 * 810000.0 * 0.16));
}

TEST_CASE("matveev exponent: frozen regression anchor") {
  Interval l2 = Interval::log2(192);
  Interval e = matveev_exponent(instance(3, 3, lng(100), {l2 * 3L, dec("0.7"), log(lng(3)) * 9L}));
  // 1.4 * 30^6 * 3^4.5 * 9 (1 + log 3)(1 + log 100) * 3 log 2 * 0.7 * 9 log 3
  const double direct = 1.4 * std::pow(30.0, 6) * std::pow(3.0, 4.5) * 9 * (1 + std::log(3.0)) *
                        (1 + std::log(100.0)) * 3 * std::log(2.0) * 0.7 * 9 * std::log(3.0);
  CHECK(e.mid_double() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(e.mid_double() == doctest::Approx(2.18171e14).epsilon(1e-5));
}

TEST_CASE("matveev exponent is monotone in each input") {
  Interval l2 = Interval::log2(192);
  auto base = [&] { return instance(3, 5, lng(1000), {l2 * 5L, dec("0.7"), dec("4.2")}); };
  const Interval e0 = matveev_exponent(base());
  auto more_b = base();
  more_b.B = lng(2000);
  auto more_d = base();
  more_d.D = 6;
  auto more_a = base();
  more_a.A[1] = dec("0.8");
  CHECK(e0.certainly_less(matveev_exponent(more_b)));
  CHECK(e0.certainly_less(matveev_exponent(more_d)));
  CHECK(e0.certainly_less(matveev_exponent(more_a)));
}

TEST_CASE("matveev rejects invalid instances") {
  CHECK_THROWS_AS(matveev_exponent(instance(1, 1, lng(1), {dec("0.1")})), std::invalid_argument);
  CHECK_THROWS_AS(matveev_exponent(instance(0, 1, lng(1), {})), std::invalid_argument);
  CHECK_THROWS_AS(matveev_exponent(instance(1, 0, lng(1), {dec("0.2")})), std::invalid_argument);
  CHECK_THROWS_AS(matveev_exponent(instance(1, 1, lng(0), {dec("0.2")})), std::invalid_argument);
}

TEST_CASE("prefactor value") {
  Interval c = matveev_prefactor(3);
  const double direct = 1.4 * std::pow(30.0, 6) * std::pow(3.0, 4.5) * 9 * (1 + std::log(3.0));
  CHECK(c.mid_double() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("stage one") {
  Stage1Result r3 = stage1_bound(3);
  CHECK(r3.coefficient.certainly_less_equal(dec("8.75e11") * 81L * sqr(log(lng(3)))));
  CHECK_NOTHROW(stage1_bound(340));
  CHECK_THROWS_AS(stage1_bound(2), std::invalid_argument);
  // h(alpha) = log(alpha)/k < log(2)/k, so D h(alpha) < log 2 < 0.7
  CHECK(Interval::log2(192).certainly_less(dec("0.7")));
}

TEST_CASE("stage two and M_k") {
  BoundReport r = stage2_bound(3);
  CHECK(r.M_k == compute_M_k(3));
  // floor(6.66e27 * 2187 * log(3)^5) ~ 2.33e31
  CHECK(r.M_k > mpz_class("23000000000000000000000000000000"));
  CHECK(r.M_k < mpz_class("23500000000000000000000000000000"));
  // the published intermediate is tight at k = 3: about 6.642e27 k^7 log^5 k
  const double ratio = r.n_bound_published_A.upper_double() / (2187.0 * std::pow(std::log(3.0), 5));
  CHECK(ratio < 6.654e27);
  CHECK(ratio > 6.6e27);

  BoundReport r340 = stage2_bound(340);
  CHECK(mpz_sizeinbase(r340.M_k.get_mpz_t(), 10) == 50);  // ~2.4e49
  for (int k = 3; k <= 690; ++k) CHECK_NOTHROW(stage2_bound(k));
}

TEST_CASE("log square helper") {
  CHECK(solve_log_square(lng(100)).mid_double() == doctest::Approx(400 * std::pow(std::log(100.0), 2)));
  CHECK(solve_log_square(lng(100)).mid_double() == doctest::Approx(8483.7).epsilon(1e-4));
  CHECK_THROWS_AS(solve_log_square(lng(99)), std::invalid_argument);
  // witness: x = A log^2 A
  Interval A = dec("12345.5");
  CHECK((A * sqr(log(A))).certainly_less(solve_log_square(A)));
}

TEST_CASE("log square helper holds on random samples") {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> logA(std::log(100.0), std::log(1e40));
  std::uniform_real_distribution<double> logx(std::log(3.0), std::log(1e60));
  int premises = 0;
  for (int i = 0; i < 10000; ++i) {
    // sample half of the x values near the boundary x ~ A log^2 x
    const Interval A = exp(Interval::from_decimal(std::to_string(logA(rng)), 192));
    Interval x = exp(Interval::from_decimal(std::to_string(logx(rng)), 192));
    if (i % 2 == 1) x = A * sqr(log(A)) * Interval::from_decimal(std::to_string(0.5 + (rng() % 1000) / 400.0), 192);
    if (!x.certainly_less(A * sqr(log(x)))) continue;
    ++premises;
    REQUIRE(x.certainly_less(solve_log_square(A)));
  }
  CHECK(premises > 1000);
}

TEST_CASE("thresholds used for large k") {
  ThresholdCheck half = threshold_check(341, 2);
  CHECK(half.holds);
  CHECK(half.ratio_decreasing);
  ThresholdCheck quarter = threshold_check(691, 4);
  CHECK(quarter.holds);
  CHECK(quarter.ratio_decreasing);
  CHECK_FALSE(threshold_check(100, 4).holds);
  CHECK_FALSE(threshold_check(100, 2).holds);
}

TEST_CASE("structural bound on a") {
  CHECK(a_within_structural_bound(10, 8));
  CHECK_FALSE(a_within_structural_bound(10, 9));
}
