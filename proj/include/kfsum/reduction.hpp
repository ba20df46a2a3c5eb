// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Certified continued fractions and the Baker-Davenport style reduction in
// the Dujella-Petho form:
//
//   if q > 6M is a convergent denominator of gamma and
//   eps = ||mu q|| - M ||gamma q|| > 0, then 0 < |u gamma - v + mu| < A B^{-w}
//   has no solution with u <= M and w >= log(A q / eps) / log B.

#pragma once

#include "kfsum/algebraic.hpp"
#include "kfsum/errors.hpp"
#include "kfsum/interval.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace kfsum {

class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(const Interval& source);

  const Interval& source() const { return source_; }
  const std::vector<mpz_class>& partial_quotients() const { return quotients_; }
  const std::vector<mpz_class>& p() const { return p_; }
  const std::vector<mpz_class>& q() const { return q_; }
  std::size_t size() const { return quotients_.size(); }
  /// True once the enclosure can no longer certify another quotient.
  bool exhausted() const { return exhausted_; }

  /// Certifies one more partial quotient; false (and exhausted()) when the
  /// enclosure of the next complete quotient does not decide its floor.
  bool extend();
  /// Extends until q_i > target; false if the enclosure runs out first.
  bool extend_past(const mpz_class& target);

  /// p_i q_{i-1} - p_{i-1} q_i = +-1 and q strictly increasing from i = 1.
  bool invariants_hold() const;

 private:
  Interval source_;
  std::vector<mpz_class> quotients_;
  std::vector<mpz_class> p_;
  std::vector<mpz_class> q_;
  mpq_class lo_;  // enclosure of the next complete quotient
  mpq_class hi_;
  bool exhausted_ = false;
};

/// Continued fraction of x, extended until some q_i > q_target. Throws
/// PrecisionError when the enclosure is too wide to get there.
ContinuedFraction cf_expand(const Interval& x, const mpz_class& q_target);

/// Enclosure of the distance from x to the nearest integer; degrades to a
/// wider enclosure (never wrong) when x straddles a half-integer.
Interval nearest_int_dist(const Interval& x);

struct ReductionInstance {
  Interval gamma;
  Interval mu;
  Interval A;
  Interval B;
  mpz_class M;
  bool two_sided = false;  // |u gamma - v + mu| rather than 0 < u gamma - v + mu
  std::string label;

  void validate() const;
};

struct ReductionOutcome {
  mpz_class q;
  std::size_t convergent_index = 0;
  Interval epsilon;
  Interval w_bound;  // log(A q / eps_lower) / log B; report upper()
  int attempts = 0;  // convergents tried, the successful one included
  mpfr_prec_t bits = 0;
};

inline constexpr int kMaxConvergentAttempts = 200;

/// Tries convergents with q > 6M in increasing order, at most
/// kMaxConvergentAttempts of them.
/// Throws PrecisionError when none gives a certified eps > 0 or when `cf`
/// runs out of certified convergents.
ReductionOutcome dujella_petho(const ReductionInstance& inst, const ContinuedFraction& cf);
/// Same, expanding the continued fraction of inst.gamma itself.
ReductionOutcome dujella_petho(const ReductionInstance& inst);

/// Reduced bound w -> largest integer that can still satisfy "value < w".
long integer_below(const Interval& w_bound);

// --- the k-generalized Fibonacci campaigns ---------------------------------

using RootProvider = std::function<RootContext(int k, long digits)>;

struct PrecisionPolicy {
  long start_digits = 0;  // 0: automatic from k and M_k
  long cap_digits = 4096;
  RootProvider roots;     // empty: dominant_root
};

/// max(2 digits(6M) + 60, 128, (2 max(bits(6M), k + 8) + 64) / log2(10)) digits.
long default_start_digits(int k, const mpz_class& M);

struct StageOneBound {
  int k = 0;
  mpz_class M;
  ReductionOutcome outcome;
  long digits = 0;
  long nm_max = 0;  // n - m <= nm_max
};

struct StageTwoPoint {
  long nm = 0;
  ReductionOutcome outcome;
  long digits = 0;
  long n_max = 0;  // n <= n_max for this n - m
};

struct StageTwoGrid {
  int k = 0;
  std::vector<StageTwoPoint> points;  // nm = 1, 2, ..., in order
  std::size_t worst = 0;              // index of the largest w_bound
  long n_max = 0;
};

struct KReduction {
  int k = 0;
  mpz_class M;
  StageOneBound stage1;
  StageTwoGrid stage2;
  long n_max = 0;
};

/// gamma = log 2 / log alpha, mu = 1 - log f_k(alpha) / log alpha, A = 6,
/// B = alpha, M = M_k, one-sided. Bounds n - m.
StageOneBound reduce_stage1(int k, const PrecisionPolicy& policy = {});

/// mu = 1 - log(f_k(alpha)(1 + alpha^{-nm})) / log alpha, A = 4, B = alpha,
/// M = M_k, two-sided. Bounds n - 1.
StageTwoPoint reduce_stage2(int k, long nm, const PrecisionPolicy& policy = {});

/// Stage two for nm = 1 .. nm_max sharing one continued fraction of gamma.
StageTwoGrid reduce_stage2_grid(int k, long nm_max, const PrecisionPolicy& policy = {});

/// Stage one followed by the stage-two grid over nm = 1 .. stage-one bound.
KReduction reduce_k(int k, const PrecisionPolicy& policy = {});

inline constexpr long kANeqNMinus2Limit = 1380;

/// The a = n - 2 campaign reuses the stage-one/stage-two forms with a = n - 2
/// substituted; throws VerificationFailure when the bound on n exceeds 1380.
KReduction reduce_a_eq_n_minus_2(int k, const PrecisionPolicy& policy = {});

}  // namespace kfsum
