// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Lower bounds for linear forms in logarithms and the chain of constants
// that turns them into an explicit polynomial bound on n in terms of k.
//
// All constants are recomputed with interval arithmetic and compared with
// the published rounded constants; a comparison that fails raises
// VerificationFailure.

#pragma once

#include "kfsum/errors.hpp"
#include "kfsum/interval.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kfsum {

struct LinearFormInstance {
  int t = 0;
  int D = 0;
  Interval B;               // upper bound on max |b_i|
  std::vector<Interval> A;  // A_i >= max(D h(gamma_i), |log gamma_i|, 0.16)
  std::string label;

  /// Throws std::invalid_argument when t, D, B or some A_i is out of range.
  void validate() const;
};

/// E = 1.4 * 30^{t+3} * t^{4.5} * D^2 (1 + log D)(1 + log B) * prod A_i, so
/// that |Lambda| > exp(-E). Returned as an enclosure; use upper() for the
/// conservative value.
Interval matveev_exponent(const LinearFormInstance& inst);

/// 1.4 * 30^6 * 3^{4.5} * k^2 (1 + log k), the t = 3, D = k prefactor.
Interval matveev_prefactor(int k, mpfr_prec_t prec = 192);

struct Stage1Result {
  int k = 0;
  Interval C1;           // prefactor
  Interval coefficient;  // K1 with (n-m) log alpha < K1 log(n-1)
  Interval published;    // 8.75e11 k^4 log^2 k
  Interval prefactor_published;  // 1.5e11 k^2 (1 + log k)
};

/// First application: gamma = (2, alpha, f_k(alpha)), A = (k log 2, 0.7,
/// 3k log k), B = n - 1, D = k. Asserts C1 <= 1.5e11 k^2 (1 + log k) and
/// K1 <= 8.75e11 k^4 log^2 k.
Stage1Result stage1_bound(int k);

struct BoundReport {
  int k = 0;
  Interval C1;
  Interval C2;
  Interval stage1_coefficient;      // (n-m) log alpha < this * log(n-1)
  Interval stage1_published;        // 8.75e11 k^4 log^2 k
  Interval stage2_inner;            // c2 with (n-1) log alpha - log 2 < c2 log(n-1) A3
  Interval stage2_inner_published;  // 2.92e11 k^3 log k
  Interval stage2_coefficient;      // n - 1 < this * log^2(n-1)
  Interval stage2_published;        // 5.12e23 k^7 log^3 k
  Interval n_bound;                 // 4 A log^2 A + 1 with A = stage2_coefficient
  Interval n_bound_published_A;     // 4 A log^2 A + 1 with the published A
  Interval intermediate_published;  // 6.654e27 k^7 log^5 k
  mpz_class M_k;                    // floor(6.66e27 k^7 log^5 k)
};

/// Chains the first application into the second (A_3 = 4k log k + (n-m) log
/// alpha), solves n - 1 < A log^2(n-1), and checks every displayed constant.
BoundReport stage2_bound(int k);

/// floor(6.66e27 k^7 log^5 k), certified.
mpz_class compute_M_k(int k);

/// 4 A log^2 A. Requires A >= 100 (std::invalid_argument otherwise).
Interval solve_log_square(const Interval& A);

/// a <= n - 2 holds for every solution with n > m >= 2 (used to prune a).
inline bool a_within_structural_bound(long n, long a) { return a <= n - 2; }

struct ThresholdCheck {
  int k = 0;
  int divisor = 0;        // compares M_k against 2^{k / divisor}
  bool holds = false;     // M_k < 2^{k/divisor} at k
  bool ratio_decreasing = false;  // log M_k - (k/divisor) log 2 decreases from k on
};

/// Certifies 6.66e27 k^7 log^5 k < 2^{k/divisor} at k and that the gap only
/// widens for larger k.
ThresholdCheck threshold_check(int k, int divisor);

}  // namespace kfsum
