// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Exact arithmetic for the k-generalized Fibonacci sequence
//
//   F_n = F_{n-1} + ... + F_{n-k}   (n >= 2),
//   F_{2-k} = ... = F_0 = 0,  F_1 = 1,
//
// together with the closed forms used to reason about it near powers of two.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kfsum {

/// Dense table of F^(k)_n for n in [2-k, n_max]. Immutable after construction.
class KFibTable {
 public:
  int k() const { return k_; }
  long first_index() const { return 2 - k_; }
  long last_index() const { return first_index() + static_cast<long>(terms_.size()) - 1; }
  bool contains(long n) const { return n >= first_index() && n <= last_index(); }

  /// Unchecked access by sequence index.
  const mpz_class& operator[](long n) const { return terms_[static_cast<std::size_t>(n - first_index())]; }
  /// Checked access; throws std::out_of_range.
  const mpz_class& at(long n) const;

  /// Terms F_{from}..F_{last_index()}.
  std::span<const mpz_class> tail(long from) const;

 private:
  friend KFibTable generate(int k, long n_max);
  friend KFibTable generate_by_window(int k, long n_max);
  KFibTable(int k, std::vector<mpz_class> terms) : k_(k), terms_(std::move(terms)) {}

  int k_;
  std::vector<mpz_class> terms_;
};

/// Builds the table with the three-term recursion F_n = 2F_{n-1} - F_{n-k-1}.
/// Throws std::invalid_argument for k < 2 or n_max < 2 - k.
KFibTable generate(int k, long n_max);

/// Same table from the defining k-term sum (running window). Kept as an
/// independent route for cross-checking generate().
KFibTable generate_by_window(int k, long n_max);

/// 2*F_{n-1} - F_{n-k-1} read from the table. Requires n >= 3 and all three
/// indices in range; throws std::out_of_range otherwise.
mpz_class term_three_recursion(const KFibTable& table, long n);

/// 2^{n-2} - (n-k) 2^{n-k-3}, evaluated exactly, for k+2 <= n <= 2k+2.
mpz_class segment_closed_form(int k, long n);

/// Binomial coefficient with binom(a, b) = 0 whenever a < b or a or b is negative.
mpz_class binomial_or_zero(long a, long b);

/// C_{n,j} = (-1)^j [binom(n-jk, j) - binom(n-jk-2, j-2)].
mpz_class cooper_howard_coefficient(int k, long n, long j);

/// F_n from the finite signed-binomial expansion around 2^{n-2}; n >= k+2.
mpz_class cooper_howard(int k, long n);

/// Truncation of the Cooper-Howard expansion after J correction terms:
///   F_n = 2^{n-2} (1 + sum_{j=1..J} C_{n,j} 2^{-(k+1)j} + s),
/// with |s| bounded by `remainder_bound`.
struct ExpansionResult {
  long n = 0;
  int k = 0;
  int order = 0;                       // J
  mpq_class main_terms;                // 2^{n-2} (1 + sum ...)
  mpq_class remainder_bound;           // bound on |s| (relative to 2^{n-2})
  std::vector<mpz_class> coefficients; // C_{n,1..J}

  /// remainder_bound * 2^{n-2}.
  mpq_class absolute_error_bound() const;
  /// |exact - main_terms| <= absolute_error_bound(), decided exactly.
  bool bounds(const mpz_class& exact) const;
};

/// J = 1 uses |s_1| < 4n^2 / 2^{2k+2}; J = 2 uses |s_3| < 4n^3 / 2^{3k+3}.
/// Requires k+2 <= n < 2^k; throws std::invalid_argument otherwise.
ExpansionResult truncated_expansion(int k, long n, int order);

/// a with value == 2^a, if value is a positive power of two.
std::optional<unsigned long> is_power_of_two(const mpz_class& value);

mpz_class power_of_two(unsigned long exponent);

/// Least significant 64 bits of a non-negative integer.
std::uint64_t low_word(const mpz_class& value);

}  // namespace kfsum
