// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Exact search for F_n + F_m = 2^a and classification of the hits into the
// three known solution families:
//
//   diagonal    (n, m, a) = (1, 1, 1) or (t, t, t-1), 2 <= t <= k+1
//   sporadic    (n, m, a) = (2, 1, 1)
//   parametric  (k + 2^l, 2^l + l - 1, k + 2^l - 2) with 2^l + l - 2 <= k

#pragma once

#include "kfsum/kfib.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kfsum {

enum class Family { diagonal, sporadic, parametric, unexpected };

enum class ARelation { equal_n_minus_2, below_n_minus_2, above_n_minus_2 };

struct SolutionRecord {
  int k = 0;
  long n = 0;
  long m = 0;
  long a = 0;
  Family family = Family::unexpected;
  int ell = 0;  // parametric family index, 0 otherwise
  ARelation a_relation = ARelation::below_n_minus_2;

  /// "A_diagonal", "B_sporadic", "C_parametric(l)" or "unexpected".
  std::string family_name() const;
  const char* a_relation_name() const;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Orders by (k, n, m, a).
bool record_less(const SolutionRecord& x, const SolutionRecord& y);

/// a with F_n + F_m = 2^a, if any. Requires n, m inside the table.
std::optional<long> verify_equation(const KFibTable& table, long n, long m);
std::optional<long> verify_equation(int k, long n, long m);

/// Tags (k, n, m, a) with its family. m = 1 is retried as m = 2 (F_1 = F_2)
/// when the literal pattern does not match.
SolutionRecord classify(int k, long n, long m, long a);

/// The parametric family for k, each member verified exactly. Also checks
/// m <= k+1 and n <= 2k+1; throws VerificationFailure on any mismatch.
std::vector<SolutionRecord> family_c_enumerate(int k);

/// All (n, a) with n <= n_max and F_n = 2^{a-1}.
std::vector<std::pair<long, long>> pure_power_scan(int k, long n_max);

/// Solutions with n <= k+1, where every term is a power of two: the
/// diagonal (1,1,1), (t,t,t-1) and the sporadic (2,1,1).
std::vector<SolutionRecord> small_index_solutions(int k);

enum class AFilter { below_n_minus_2, equal_n_minus_2, all };

const char* a_filter_name(AFilter filter);

/// Every n in [n_lo, n_hi], m in [m_lo, n-1] with F_n + F_m a power of two
/// passing `filter`, using the low-word prefilter and exact verification.
std::vector<SolutionRecord> scan_pairwise(const KFibTable& table, long n_lo, long n_hi, long m_lo, AFilter filter);

/// a = n - 2 only: for each n, binary search R = 2^{n-2} - F_n among
/// F_{m_lo} .. F_{n-1}.
std::vector<SolutionRecord> scan_targeted(const KFibTable& table, long n_lo, long n_hi, long m_lo);

/// Drops (k, n, 1, a) when (k, n, 2, a) is also present.
std::vector<SolutionRecord> fold_m_one(std::vector<SolutionRecord> records);

struct SearchSpec {
  int k_min = 3;
  int k_max = 3;
  std::function<long(int)> n_max;  // upper end of n for each k
  long m_min = 2;
  AFilter filter = AFilter::all;
  bool targeted = false;  // scan_targeted (requires equal_n_minus_2)
  int jobs = 1;
  /// Completed k values from an earlier run; their hits are reused.
  std::map<int, std::vector<SolutionRecord>> resume;
  /// Called once per newly completed k (serialized).
  std::function<void(int, const std::vector<SolutionRecord>&)> on_complete;
};

/// Scans n in [k+2, n_max(k)] for each k, merges hits in (k, n, m) order
/// independently of the worker count, and folds m = 1 duplicates.
std::vector<SolutionRecord> exhaustive_search(const SearchSpec& spec);

}  // namespace kfsum
