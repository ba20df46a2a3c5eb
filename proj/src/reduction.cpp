// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/reduction.hpp"

#include "kfsum/matveev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kfsum {

ContinuedFraction::ContinuedFraction(const Interval& source)
    : source_(source), lo_(source.lower_rational()), hi_(source.upper_rational()) {}

bool ContinuedFraction::extend() {
  if (exhausted_) return false;
  mpz_class a_lo;
  mpz_class a_hi;
  mpz_fdiv_q(a_lo.get_mpz_t(), lo_.get_num_mpz_t(), lo_.get_den_mpz_t());
  mpz_fdiv_q(a_hi.get_mpz_t(), hi_.get_num_mpz_t(), hi_.get_den_mpz_t());
  if (a_lo != a_hi) {
    exhausted_ = true;
    return false;
  }
  const mpz_class& a = a_lo;
  const std::size_t i = quotients_.size();
  const mpz_class p1 = i >= 1 ? p_[i - 1] : mpz_class(1);
  const mpz_class q1 = i >= 1 ? q_[i - 1] : mpz_class(0);
  const mpz_class p2 = i >= 2 ? p_[i - 2] : mpz_class(i == 1 ? 1 : 0);
  const mpz_class q2 = i >= 2 ? q_[i - 2] : mpz_class(i == 1 ? 0 : 1);
  quotients_.push_back(a);
  p_.push_back(a * p1 + p2);
  q_.push_back(a * q1 + q2);

  // next complete quotient 1 / (x - a) over [lo, hi]
  const mpq_class frac_lo = lo_ - a;
  const mpq_class frac_hi = hi_ - a;
  if (sgn(frac_lo) == 0) {
    exhausted_ = true;  // the enclosure reaches a rational; nothing more is certain
    return true;
  }
  lo_ = 1 / frac_hi;
  hi_ = 1 / frac_lo;
  return true;
}

bool ContinuedFraction::extend_past(const mpz_class& target) {
  while (q_.empty() || q_.back() <= target) {
    if (!extend()) return false;
  }
  return true;
}

bool ContinuedFraction::invariants_hold() const {
  for (std::size_t i = 1; i < q_.size(); ++i) {
    const mpz_class det = p_[i] * q_[i - 1] - p_[i - 1] * q_[i];
    if (det != 1 && det != -1) return false;
    if (i >= 2 && q_[i] <= q_[i - 1]) return false;
    if (sgn(quotients_[i]) <= 0) return false;
  }
  return true;
}

ContinuedFraction cf_expand(const Interval& x, const mpz_class& q_target) {
  ContinuedFraction cf(x);
  if (!cf.extend_past(q_target)) {
    throw PrecisionError("cf_expand: enclosure too wide to reach q > " + q_target.get_str());
  }
  return cf;
}

Interval nearest_int_dist(const Interval& x) {
  const mpfr_prec_t prec = x.precision();
  mpz_class z_lo;
  mpz_class z_hi;
  mpfr_get_z(z_lo.get_mpz_t(), x.lower(), MPFR_RNDN);
  mpfr_get_z(z_hi.get_mpz_t(), x.upper(), MPFR_RNDN);
  const Interval half(mpq_class(1, 2), prec);
  if (z_lo == z_hi) {
    Interval d = abs(x - z_lo);
    return min_with(d, half);
  }
  if (z_hi - z_lo == 1) {
    // straddles the half-integer z_lo + 1/2
    Interval d1 = Interval::point(x.lower()) - z_lo;
    Interval d2 = Interval(z_hi, prec) - Interval::point(x.upper());
    Interval low = min_with(d1, d2);
    return Interval::hull(Interval::point(low.lower()), half);
  }
  return Interval::hull(Interval(0L, prec), half);
}

void ReductionInstance::validate() const {
  if (!A.certainly_positive()) throw std::invalid_argument("reduction: A must be > 0");
  if (!B.certainly_greater(1)) throw std::invalid_argument("reduction: B must be > 1");
  if (M < 1) throw std::invalid_argument("reduction: M must be >= 1");
}

ReductionOutcome dujella_petho(const ReductionInstance& inst, const ContinuedFraction& cf) {
  inst.validate();
  const mpz_class six_m = inst.M * 6;
  std::size_t index = 0;
  while (index < cf.size() && cf.q()[index] <= six_m) ++index;
  const mpfr_prec_t prec = std::max(inst.gamma.precision(), inst.mu.precision());
  for (int attempt = 1; attempt <= kMaxConvergentAttempts; ++attempt, ++index) {
    if (index >= cf.size()) {
      throw PrecisionError("dujella_petho[" + inst.label + "]: no certified convergent left (attempt " +
                           std::to_string(attempt) + ")");
    }
    const mpz_class& q = cf.q()[index];
    const Interval qi(q, prec);
    Interval epsilon = nearest_int_dist(inst.mu * qi) - nearest_int_dist(inst.gamma * qi) * inst.M;
    if (!epsilon.certainly_positive()) continue;
    ReductionOutcome out;
    out.q = q;
    out.convergent_index = index;
    out.attempts = attempt;
    out.bits = prec;
    const Interval eps_low = Interval::point(epsilon.lower());
    out.w_bound = log(inst.A * qi / eps_low) / log(inst.B);
    out.epsilon = std::move(epsilon);
    return out;
  }
  throw PrecisionError("dujella_petho[" + inst.label + "]: eps <= 0 for " +
                       std::to_string(kMaxConvergentAttempts) + " convergents");
}

ReductionOutcome dujella_petho(const ReductionInstance& inst) {
  ContinuedFraction cf(inst.gamma);
  cf.extend_past(inst.M * 6);
  for (int i = 0; i < kMaxConvergentAttempts && cf.extend(); ++i) {
  }
  return dujella_petho(inst, cf);
}

long integer_below(const Interval& w_bound) {
  // value < w <= upper  =>  value <= ceil(upper) - 1 <= floor(upper)
  mpz_class f;
  mpfr_get_z(f.get_mpz_t(), w_bound.upper(), MPFR_RNDD);
  if (!f.fits_slong_p()) throw std::overflow_error("integer_below: bound does not fit in long");
  return f.get_si();
}

long default_start_digits(int k, const mpz_class& M) {
  const mpz_class six_m = M * 6;
  const long dec = static_cast<long>(mpz_sizeinbase(six_m.get_mpz_t(), 10));
  const long bin = static_cast<long>(mpz_sizeinbase(six_m.get_mpz_t(), 2));
  const long by_k = static_cast<long>(std::ceil((2.0 * std::max(bin, static_cast<long>(k) + 8) + 64) / std::log2(10.0)));
  return std::max({2 * dec + 60, 128L, by_k});
}

namespace {

struct Constants {
  RootContext ctx;
  Interval log_alpha;
  Interval gamma;
  Interval mu_hat;
  Interval log_f;
};

Constants constants_at(int k, long digits, const PrecisionPolicy& policy) {
  Constants c;
  c.ctx = policy.roots ? policy.roots(k, digits) : dominant_root(k, digits);
  const mpfr_prec_t prec = c.ctx.bits();
  c.log_alpha = log(c.ctx.alpha);
  c.gamma = Interval::log2(prec) / c.log_alpha;
  c.log_f = log(c.ctx.f_alpha);
  c.mu_hat = Interval(1L, prec) - c.log_f / c.log_alpha;
  return c;
}

ContinuedFraction gamma_fraction(const Constants& c, const mpz_class& M) {
  ContinuedFraction cf(c.gamma);
  if (!cf.extend_past(M * 6)) throw PrecisionError("continued fraction of gamma stops below 6M");
  for (int i = 0; i < kMaxConvergentAttempts && cf.extend(); ++i) {
  }
  return cf;
}

template <class F>
auto escalate(int k, const mpz_class& M, const PrecisionPolicy& policy, const std::string& what, F&& body) {
  long digits = policy.start_digits > 0 ? policy.start_digits : default_start_digits(k, M);
  digits = std::min(digits, policy.cap_digits);
  for (;;) {
    try {
      return body(digits);
    } catch (const PrecisionError& e) {
      if (digits >= policy.cap_digits) {
        throw VerificationFailure(what + " k=" + std::to_string(k) + ": precision cap of " +
                                  std::to_string(policy.cap_digits) + " digits reached: " + e.what());
      }
      digits = std::min(digits * 2, policy.cap_digits);
    }
  }
}

ReductionInstance stage2_instance(const Constants& c, const Interval& alpha_neg_nm, const mpz_class& M, long nm) {
  const mpfr_prec_t prec = c.ctx.bits();
  ReductionInstance inst;
  inst.gamma = c.gamma;
  inst.mu = Interval(1L, prec) - (c.log_f + log1p(alpha_neg_nm)) / c.log_alpha;
  inst.A = Interval(4L, prec);
  inst.B = c.ctx.alpha;
  inst.M = M;
  inst.two_sided = true;
  inst.label = "stage2 k=" + std::to_string(c.ctx.k) + " nm=" + std::to_string(nm);
  return inst;
}

StageTwoPoint make_point(long nm, ReductionOutcome outcome, long digits) {
  StageTwoPoint p;
  p.nm = nm;
  p.digits = digits;
  // n - 1 < w  =>  n <= integer_below(w) + 1
  p.n_max = integer_below(outcome.w_bound) + 1;
  p.outcome = std::move(outcome);
  return p;
}

void check_k(int k) {
  if (k < 3) throw std::invalid_argument("reduction campaigns need k >= 3");
}

}  // namespace

StageOneBound reduce_stage1(int k, const PrecisionPolicy& policy) {
  check_k(k);
  const mpz_class M = compute_M_k(k);
  return escalate(k, M, policy, "stage1", [&](long digits) {
    const Constants c = constants_at(k, digits, policy);
    ReductionInstance inst;
    inst.gamma = c.gamma;
    inst.mu = c.mu_hat;
    inst.A = Interval(6L, c.ctx.bits());
    inst.B = c.ctx.alpha;
    inst.M = M;
    inst.two_sided = false;
    inst.label = "stage1 k=" + std::to_string(k);
    StageOneBound out;
    out.k = k;
    out.M = M;
    out.digits = digits;
    out.outcome = dujella_petho(inst, gamma_fraction(c, M));
    out.nm_max = integer_below(out.outcome.w_bound);
    return out;
  });
}

StageTwoPoint reduce_stage2(int k, long nm, const PrecisionPolicy& policy) {
  check_k(k);
  if (nm < 1) throw std::invalid_argument("reduce_stage2: nm must be >= 1");
  const mpz_class M = compute_M_k(k);
  return escalate(k, M, policy, "stage2 nm=" + std::to_string(nm), [&](long digits) {
    const Constants c = constants_at(k, digits, policy);
    const Interval alpha_neg = pow(c.ctx.alpha, -nm);
    const ReductionInstance inst = stage2_instance(c, alpha_neg, M, nm);
    return make_point(nm, dujella_petho(inst, gamma_fraction(c, M)), digits);
  });
}

StageTwoGrid reduce_stage2_grid(int k, long nm_max, const PrecisionPolicy& policy) {
  check_k(k);
  if (nm_max < 1) throw std::invalid_argument("reduce_stage2_grid: nm_max must be >= 1");
  const mpz_class M = compute_M_k(k);
  StageTwoGrid grid;
  grid.k = k;
  grid.points.reserve(static_cast<std::size_t>(nm_max));

  // One continued fraction of gamma for the whole grid; points whose eps
  // cannot be certified at this precision fall back to their own escalation.
  escalate(k, M, policy, "stage2 grid", [&](long digits) {
    grid.points.clear();
    const Constants c = constants_at(k, digits, policy);
    const ContinuedFraction cf = gamma_fraction(c, M);
    const Interval inv_alpha = Interval(1L, c.ctx.bits()) / c.ctx.alpha;
    Interval alpha_neg = inv_alpha;
    for (long nm = 1; nm <= nm_max; ++nm) {
      const ReductionInstance inst = stage2_instance(c, alpha_neg, M, nm);
      try {
        grid.points.push_back(make_point(nm, dujella_petho(inst, cf), digits));
      } catch (const PrecisionError&) {
        PrecisionPolicy retry = policy;
        retry.start_digits = std::min(digits * 2, policy.cap_digits);
        if (digits >= policy.cap_digits) throw;
        grid.points.push_back(reduce_stage2(k, nm, retry));
      }
      alpha_neg *= inv_alpha;
    }
    return 0;
  });

  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    if (grid.points[i].outcome.w_bound.upper_double() > grid.points[grid.worst].outcome.w_bound.upper_double()) {
      grid.worst = i;
    }
    grid.n_max = std::max(grid.n_max, grid.points[i].n_max);
  }
  return grid;
}

KReduction reduce_k(int k, const PrecisionPolicy& policy) {
  KReduction out;
  out.k = k;
  out.stage1 = reduce_stage1(k, policy);
  out.M = out.stage1.M;
  out.stage2 = reduce_stage2_grid(k, std::max(1L, out.stage1.nm_max), policy);
  out.n_max = out.stage2.n_max;
  return out;
}

KReduction reduce_a_eq_n_minus_2(int k, const PrecisionPolicy& policy) {
  KReduction out = reduce_k(k, policy);
  if (out.n_max > kANeqNMinus2Limit) {
    throw VerificationFailure("a = n - 2 campaign, k=" + std::to_string(k) + ": bound on n is " +
                              std::to_string(out.n_max) + " > " + std::to_string(kANeqNMinus2Limit));
  }
  return out;
}

}  // namespace kfsum
