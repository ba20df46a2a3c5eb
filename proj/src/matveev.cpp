// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/matveev.hpp"

#include <stdexcept>

namespace kfsum {

namespace {

constexpr mpfr_prec_t kPrec = 192;

Interval num(const char* text) { return Interval::from_decimal(text, kPrec); }
Interval num(long v) { return Interval(v, kPrec); }

void require(bool ok, int k, const std::string& what) {
  if (!ok) throw VerificationFailure("bound chain, k=" + std::to_string(k) + ": " + what);
}

void check_k(int k) {
  if (k < 3) throw std::invalid_argument("bound chain needs k >= 3");
}

// k^e log^f k
Interval k_log_power(int k, long e, long f) {
  return pow(num(k), e) * pow(log(num(k)), f);
}

}  // namespace

void LinearFormInstance::validate() const {
  if (t < 1) throw std::invalid_argument("linear form: t must be >= 1");
  if (D < 1) throw std::invalid_argument("linear form: D must be >= 1");
  if (A.size() != static_cast<std::size_t>(t)) throw std::invalid_argument("linear form: need t values A_i");
  if (mpfr_cmp_si(B.lower(), 1) < 0) {
    throw std::invalid_argument("linear form: B must be >= 1");
  }
  const Interval floor_value = Interval::from_decimal("0.16", kPrec);
  for (const auto& a : A) {
    if (a.certainly_less(floor_value)) throw std::invalid_argument("linear form: A_i must be >= 0.16");
  }
}

Interval matveev_exponent(const LinearFormInstance& inst) {
  inst.validate();
  const Interval t = num(inst.t);
  const Interval d = num(inst.D);
  Interval e = num("1.4") * pow(num(30), inst.t + 3) * pow(t, num("4.5")) * sqr(d) * (log(d) + 1L) *
               (log(inst.B) + 1L);
  for (const auto& a : inst.A) e *= a;
  return e;
}

Interval matveev_prefactor(int k, mpfr_prec_t prec) {
  const Interval kk(static_cast<long>(k), prec);
  return Interval::from_decimal("1.4", prec) * pow(Interval(30L, prec), 6) *
         pow(Interval(3L, prec), Interval::from_decimal("4.5", prec)) * sqr(kk) * (log(kk) + 1L);
}

Stage1Result stage1_bound(int k) {
  check_k(k);
  const Interval kk = num(k);
  const Interval log2 = Interval::log2(kPrec);
  const Interval log4 = log2 * 2L;
  // log(n-1) >= log 4 since n >= k + 2 >= 5, so 1 + log(n-1) <= (1 + 1/log 4) log(n-1)
  // and log 3 <= (log 3 / log 4) log(n-1).
  const Interval widen = Interval(1L, kPrec) + Interval(1L, kPrec) / log4;

  Stage1Result out;
  out.k = k;
  out.C1 = matveev_prefactor(k, kPrec);
  out.prefactor_published = num("1.5e11") * sqr(kk) * (log(kk) + 1L);
  out.coefficient = log(num(3)) / log4 + out.C1 * widen * (kk * log2) * num("0.7") * (kk * log(kk) * 3L);
  out.published = num("8.75e11") * k_log_power(k, 4, 2);
  require(out.C1.certainly_less(out.prefactor_published), k, "C1 exceeds 1.5e11 k^2 (1 + log k)");
  require(out.coefficient.certainly_less_equal(out.published), k, "(n-m) coefficient exceeds 8.75e11 k^4 log^2 k");
  return out;
}

Interval solve_log_square(const Interval& A) {
  if (mpfr_cmp_si(A.lower(), 100) < 0) {
    throw std::invalid_argument("solve_log_square: A must be >= 100");
  }
  return A * sqr(log(A)) * 4L;
}

mpz_class compute_M_k(int k) {
  check_k(k);
  for (mpfr_prec_t prec = kPrec; prec <= 4096; prec *= 2) {
    const Interval kk(static_cast<long>(k), prec);
    const Interval value = Interval::from_decimal("6.66e27", prec) * pow(kk, 7) * pow(log(kk), 5);
    if (auto f = value.unique_floor()) return *f;
  }
  throw PrecisionError("M_k floor not decided at k=" + std::to_string(k));
}

BoundReport stage2_bound(int k) {
  const Stage1Result s1 = stage1_bound(k);
  const Interval kk = num(k);
  const Interval log2 = Interval::log2(kPrec);
  const Interval log4 = log2 * 2L;
  const Interval widen = Interval(1L, kPrec) + Interval(1L, kPrec) / log4;

  BoundReport out;
  out.k = k;
  out.C1 = s1.C1;
  out.stage1_coefficient = s1.coefficient;
  out.stage1_published = s1.published;
  out.C2 = matveev_prefactor(k, kPrec);
  require(out.C2.certainly_less(s1.prefactor_published), k, "C2 exceeds 1.5e11 k^2 (1 + log k)");

  // (n-1) log alpha - log 2 < c2 log(n-1) (4k log k + (n-m) log alpha)
  out.stage2_inner = out.C2 * widen * (kk * log2) * num("0.7");
  out.stage2_inner_published = num("2.92e11") * k_log_power(k, 3, 1);
  require(out.stage2_inner.certainly_less_equal(out.stage2_inner_published), k,
          "second application coefficient exceeds 2.92e11 k^3 log k");

  // alpha > 2(1 - 2^{-k}) >= 7/4 > e^{1/2}, hence 1/log alpha < 2.
  require((log(Interval(mpq_class(7, 4), kPrec)) * 2L).certainly_greater(1), k, "1/log alpha < 2");
  // n - 1 < 2 log 2 + 2 c2 4k log k log(n-1) + 2 c2 K1 log^2(n-1), then
  // divide by log^2(n-1) >= log^2 4 and log(n-1) >= log 4.
  out.stage2_coefficient = (log2 / sqr(log4) + out.stage2_inner * (kk * log(kk) * 4L) / log4 +
                            out.stage2_inner * out.stage1_coefficient) *
                           2L;
  out.stage2_published = num("5.12e23") * k_log_power(k, 7, 3);
  require(out.stage2_coefficient.certainly_less_equal(out.stage2_published), k,
          "(n-1) coefficient exceeds 5.12e23 k^7 log^3 k");

  out.n_bound = solve_log_square(out.stage2_coefficient) + 1L;
  out.n_bound_published_A = solve_log_square(out.stage2_published) + 1L;
  out.intermediate_published = num("6.654e27") * k_log_power(k, 7, 5);
  require(out.n_bound_published_A.certainly_less(out.intermediate_published), k,
          "4 A log^2 A + 1 exceeds 6.654e27 k^7 log^5 k");
  require(out.intermediate_published.certainly_less(num("6.66e27") * k_log_power(k, 7, 5)), k,
          "6.654e27 < 6.66e27");

  out.M_k = compute_M_k(k);
  require(out.M_k >= 1, k, "M_k >= 1");
  // n is an integer below n_bound, so n <= M_k once n_bound <= M_k + 1.
  require(out.n_bound.certainly_less_equal(Interval(mpz_class(out.M_k + 1), kPrec)), k,
          "computed bound on n exceeds M_k");
  return out;
}

ThresholdCheck threshold_check(int k, int divisor) {
  check_k(k);
  if (divisor <= 0) throw std::invalid_argument("threshold_check: divisor must be positive");
  const Interval kk = num(k);
  const Interval log2 = Interval::log2(kPrec);
  ThresholdCheck out;
  out.k = k;
  out.divisor = divisor;
  const Interval lhs = log(num("6.66e27")) + log(kk) * 7L + log(log(kk)) * 5L;
  const Interval rhs = kk * log2 / static_cast<long>(divisor);
  out.holds = lhs.certainly_less(rhs);
  // d/dx [7 log x + 5 log log x - (x/divisor) log 2] = 7/x + 5/(x log x) - log2/divisor;
  // both positive terms decrease, so a negative value at k stays negative.
  const Interval slope = Interval(7L, kPrec) / kk + Interval(5L, kPrec) / (kk * log(kk)) -
                         log2 / static_cast<long>(divisor);
  out.ratio_decreasing = slope.certainly_negative();
  return out;
}

}  // namespace kfsum
