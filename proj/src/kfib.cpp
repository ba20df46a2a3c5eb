// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/kfib.hpp"

#include <stdexcept>
#include <string>

namespace kfsum {

namespace {

void check_generate_args(int k, long n_max) {
  if (k < 2) throw std::invalid_argument("k must be >= 2, got " + std::to_string(k));
  if (n_max < 2 - k) {
    throw std::invalid_argument("n_max must be >= 2-k, got " + std::to_string(n_max));
  }
}

// 2^e as an exact rational; e may be negative.
mpq_class dyadic(long e) {
  mpq_class out(1);
  if (e >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  out.canonicalize();
  return out;
}

mpz_class require_integral(const mpq_class& value, const char* what) {
  if (value.get_den() != 1) throw std::logic_error(std::string(what) + " produced a non-integer");
  return value.get_num();
}

}  // namespace

const mpz_class& KFibTable::at(long n) const {
  if (!contains(n)) {
    throw std::out_of_range("index " + std::to_string(n) + " outside table [" +
                            std::to_string(first_index()) + ", " + std::to_string(last_index()) + "]");
  }
  return (*this)[n];
}

std::span<const mpz_class> KFibTable::tail(long from) const {
  if (!contains(from)) throw std::out_of_range("tail start outside table");
  const auto offset = static_cast<std::size_t>(from - first_index());
  return std::span<const mpz_class>(terms_).subspan(offset);
}

KFibTable generate(int k, long n_max) {
  check_generate_args(k, n_max);
  const long first = 2 - k;
  std::vector<mpz_class> terms(static_cast<std::size_t>(n_max - first + 1));
  auto at = [&](long n) -> mpz_class& { return terms[static_cast<std::size_t>(n - first)]; };
  if (n_max >= 1) at(1) = 1;
  if (n_max >= 2) at(2) = 1;
  for (long n = 3; n <= n_max; ++n) {
    mpz_class& out = at(n);
    mpz_mul_2exp(out.get_mpz_t(), at(n - 1).get_mpz_t(), 1);
    out -= at(n - k - 1);
  }
  return KFibTable(k, std::move(terms));
}

KFibTable generate_by_window(int k, long n_max) {
  check_generate_args(k, n_max);
  const long first = 2 - k;
  std::vector<mpz_class> terms(static_cast<std::size_t>(n_max - first + 1));
  auto at = [&](long n) -> mpz_class& { return terms[static_cast<std::size_t>(n - first)]; };
  if (n_max >= 1) at(1) = 1;
  // window = F_{n-1} + ... + F_{n-k}
  mpz_class window = 1;
  for (long n = 2; n <= n_max; ++n) {
    at(n) = window;
    window += at(n);
    window -= at(n - k);
  }
  return KFibTable(k, std::move(terms));
}

mpz_class term_three_recursion(const KFibTable& table, long n) {
  if (n < 3) throw std::out_of_range("three-term recursion needs n >= 3");
  if (!table.contains(n)) throw std::out_of_range("three-term recursion: n beyond the table");
  const mpz_class& prev = table.at(n - 1);
  const mpz_class& back = table.at(n - table.k() - 1);
  return 2 * prev - back;
}

mpz_class segment_closed_form(int k, long n) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n < k + 2 || n > 2L * k + 2) {
    throw std::invalid_argument("segment closed form needs k+2 <= n <= 2k+2");
  }
  mpq_class value = dyadic(n - 2) - mpq_class(n - k) * dyadic(n - k - 3);
  return require_integral(value, "segment_closed_form");
}

mpz_class binomial_or_zero(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

mpz_class cooper_howard_coefficient(int k, long n, long j) {
  mpz_class c = binomial_or_zero(n - j * k, j) - binomial_or_zero(n - j * k - 2, j - 2);
  return (j % 2 == 0) ? c : mpz_class(-c);
}

mpz_class cooper_howard(int k, long n) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n < k + 2) throw std::invalid_argument("Cooper-Howard expansion needs n >= k+2");
  const long top = (n + k) / (k + 1) - 1;
  mpq_class sum = dyadic(n - 2);
  for (long j = 1; j <= top; ++j) {
    sum += mpq_class(cooper_howard_coefficient(k, n, j)) * dyadic(n - (k + 1) * j - 2);
  }
  return require_integral(sum, "cooper_howard");
}

mpq_class ExpansionResult::absolute_error_bound() const { return remainder_bound * dyadic(n - 2); }

bool ExpansionResult::bounds(const mpz_class& exact) const {
  mpq_class diff = mpq_class(exact) - main_terms;
  return abs(diff) <= absolute_error_bound();
}

ExpansionResult truncated_expansion(int k, long n, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("truncation order must be 1 or 2");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n < k + 2) throw std::invalid_argument("expansion needs n >= k+2");
  if (k < 63 && n >= (1L << k)) throw std::invalid_argument("expansion tail bound needs n < 2^k");

  ExpansionResult out;
  out.n = n;
  out.k = k;
  out.order = order;
  mpq_class relative = 1;
  for (long j = 1; j <= order; ++j) {
    mpz_class c = cooper_howard_coefficient(k, n, j);
    relative += mpq_class(c) * dyadic(-(k + 1) * j);
    out.coefficients.push_back(std::move(c));
  }
  out.main_terms = relative * dyadic(n - 2);
  const mpq_class nn(n);
  if (order == 1) {
    out.remainder_bound = 4 * nn * nn * dyadic(-(2L * k + 2));
  } else {
    out.remainder_bound = 4 * nn * nn * nn * dyadic(-(3L * k + 3));
  }
  return out;
}

std::optional<unsigned long> is_power_of_two(const mpz_class& value) {
  if (sgn(value) <= 0) return std::nullopt;
  if (mpz_popcount(value.get_mpz_t()) != 1) return std::nullopt;
  return mpz_scan1(value.get_mpz_t(), 0);
}

mpz_class power_of_two(unsigned long exponent) {
  mpz_class out;
  mpz_setbit(out.get_mpz_t(), exponent);
  return out;
}

std::uint64_t low_word(const mpz_class& value) {
  static_assert(sizeof(mp_limb_t) == sizeof(std::uint64_t), "64-bit GMP limbs expected");
  return static_cast<std::uint64_t>(mpz_getlimbn(value.get_mpz_t(), 0));
}

}  // namespace kfsum
