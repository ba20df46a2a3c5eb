// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/search.hpp"

#include "kfsum/errors.hpp"
#include "kfsum/parallel.hpp"
#include "kfsum/simd/pow2_filter.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kfsum {

std::string SolutionRecord::family_name() const {
  switch (family) {
    case Family::diagonal:
      return "A_diagonal";
    case Family::sporadic:
      return "B_sporadic";
    case Family::parametric:
      return "C_parametric(" + std::to_string(ell) + ")";
    case Family::unexpected:
      break;
  }
  return "unexpected";
}

const char* SolutionRecord::a_relation_name() const {
  switch (a_relation) {
    case ARelation::equal_n_minus_2:
      return "a=n-2";
    case ARelation::below_n_minus_2:
      return "a<n-2";
    case ARelation::above_n_minus_2:
      return "a>n-2";
  }
  return "?";
}

bool record_less(const SolutionRecord& x, const SolutionRecord& y) {
  return std::tie(x.k, x.n, x.m, x.a) < std::tie(y.k, y.n, y.m, y.a);
}

std::optional<long> verify_equation(const KFibTable& table, long n, long m) {
  const auto a = is_power_of_two(table.at(n) + table.at(m));
  if (!a) return std::nullopt;
  return static_cast<long>(*a);
}

std::optional<long> verify_equation(int k, long n, long m) {
  if (m < 1 || n < m) throw std::invalid_argument("verify_equation: need n >= m >= 1");
  return verify_equation(generate(k, n), n, m);
}

namespace {

bool matches_diagonal(int k, long n, long m, long a) {
  if (n != m) return false;
  return (n == 1 && a == 1) || (n >= 2 && n <= k + 1 && a == n - 1);
}

int matches_parametric(int k, long n, long m, long a) {
  for (int ell = 1; ell < 62; ++ell) {
    const long p = 1L << ell;
    if (p + ell - 2 > k) break;
    if (n == k + p && m == p + ell - 1 && a == k + p - 2) return ell;
  }
  return 0;
}

ARelation relation(long n, long a) {
  if (a == n - 2) return ARelation::equal_n_minus_2;
  return a < n - 2 ? ARelation::below_n_minus_2 : ARelation::above_n_minus_2;
}

bool keep(AFilter filter, long n, long a) {
  switch (filter) {
    case AFilter::below_n_minus_2:
      return a < n - 2;
    case AFilter::equal_n_minus_2:
      return a == n - 2;
    case AFilter::all:
      return true;
  }
  return false;
}

}  // namespace

SolutionRecord classify(int k, long n, long m, long a) {
  SolutionRecord r;
  r.k = k;
  r.n = n;
  r.m = m;
  r.a = a;
  r.a_relation = relation(n, a);
  if (n == 2 && m == 1 && a == 1) {
    r.family = Family::sporadic;
    return r;
  }
  auto match = [&](long mm) {
    if (matches_diagonal(k, n, mm, a)) {
      r.family = Family::diagonal;
      return true;
    }
    if (const int ell = matches_parametric(k, n, mm, a)) {
      r.family = Family::parametric;
      r.ell = ell;
      return true;
    }
    return false;
  };
  if (match(m) || (m == 1 && match(2))) return r;
  r.family = Family::unexpected;
  return r;
}

std::vector<SolutionRecord> family_c_enumerate(int k) {
  if (k < 3) throw std::invalid_argument("family_c_enumerate: k >= 3");
  std::vector<SolutionRecord> out;
  for (int ell = 1; ell < 62; ++ell) {
    const long p = 1L << ell;
    if (p + ell - 2 > k) break;
    const long n = k + p;
    const long m = p + ell - 1;
    const long a = k + p - 2;
    if (m > k + 1 || n > 2L * k + 1) {
      throw VerificationFailure("parametric family outside m <= k+1, n <= 2k+1 at k=" + std::to_string(k) +
                                " l=" + std::to_string(ell));
    }
    if (verify_equation(k, n, m) != a) {
      throw VerificationFailure("parametric family member does not verify at k=" + std::to_string(k) +
                                " l=" + std::to_string(ell));
    }
    out.push_back(classify(k, n, m, a));
  }
  return out;
}

std::vector<std::pair<long, long>> pure_power_scan(int k, long n_max) {
  std::vector<std::pair<long, long>> out;
  if (n_max < 1) return out;
  const KFibTable t = generate(k, n_max);
  for (long n = 1; n <= n_max; ++n) {
    if (auto e = is_power_of_two(t[n])) out.emplace_back(n, static_cast<long>(*e) + 1);
  }
  return out;
}

std::vector<SolutionRecord> small_index_solutions(int k) {
  if (k < 2) throw std::invalid_argument("small_index_solutions: k >= 2");
  std::vector<SolutionRecord> out;
  out.push_back(classify(k, 1, 1, 1));
  out.push_back(classify(k, 2, 1, 1));
  for (long t = 2; t <= k + 1; ++t) out.push_back(classify(k, t, t, t - 1));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

const char* a_filter_name(AFilter filter) {
  switch (filter) {
    case AFilter::below_n_minus_2:
      return "a<n-2";
    case AFilter::equal_n_minus_2:
      return "a=n-2";
    case AFilter::all:
      return "all";
  }
  return "?";
}

std::vector<SolutionRecord> scan_pairwise(const KFibTable& table, long n_lo, long n_hi, long m_lo, AFilter filter) {
  if (m_lo < 1) throw std::invalid_argument("scan_pairwise: m_lo >= 1");
  if (n_hi < n_lo) return {};
  if (!table.contains(n_hi)) throw std::out_of_range("scan_pairwise: n beyond table");
  std::vector<std::uint64_t> lows;
  lows.reserve(static_cast<std::size_t>(n_hi - m_lo + 1));
  for (long m = m_lo; m <= n_hi; ++m) lows.push_back(low_word(table[m]));

  std::vector<SolutionRecord> out;
  std::vector<std::uint32_t> hits;
  mpz_class sum;
  for (long n = std::max(n_lo, m_lo + 1); n <= n_hi; ++n) {
    hits.clear();
    simd::pow2_candidates(low_word(table[n]), lows.data(), static_cast<std::size_t>(n - m_lo), hits);
    for (std::uint32_t j : hits) {
      const long m = m_lo + static_cast<long>(j);
      sum = table[n] + table[m];
      const auto a = is_power_of_two(sum);
      if (!a) continue;
      const long aa = static_cast<long>(*a);
      if (keep(filter, n, aa)) out.push_back(classify(table.k(), n, m, aa));
    }
  }
  return out;
}

std::vector<SolutionRecord> scan_targeted(const KFibTable& table, long n_lo, long n_hi, long m_lo) {
  if (m_lo < 1) throw std::invalid_argument("scan_targeted: m_lo >= 1");
  if (n_hi < n_lo) return {};
  if (!table.contains(n_hi)) throw std::out_of_range("scan_targeted: n beyond table");
  const std::span<const mpz_class> prefix = table.tail(m_lo);  // non-decreasing for m >= 1
  std::vector<SolutionRecord> out;
  mpz_class target;
  for (long n = std::max(n_lo, m_lo + 1); n <= n_hi; ++n) {
    if (n < 2) continue;
    target = power_of_two(static_cast<unsigned long>(n - 2)) - table[n];
    if (sgn(target) <= 0) continue;
    const auto first = prefix.begin();
    const auto last = prefix.begin() + (n - m_lo);
    auto [lo, hi] = std::equal_range(first, last, target);
    for (auto it = lo; it != hi; ++it) {
      const long m = m_lo + static_cast<long>(it - first);
      out.push_back(classify(table.k(), n, m, n - 2));
    }
  }
  return out;
}

std::vector<SolutionRecord> fold_m_one(std::vector<SolutionRecord> records) {
  std::sort(records.begin(), records.end(), record_less);
  std::vector<SolutionRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (r.m == 1 && r.n > 2) {
      const bool twin = std::any_of(records.begin(), records.end(), [&](const SolutionRecord& o) {
        return o.k == r.k && o.n == r.n && o.m == 2 && o.a == r.a;
      });
      if (twin) continue;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<SolutionRecord> exhaustive_search(const SearchSpec& spec) {
  if (spec.k_max < spec.k_min || spec.k_min < 2) throw std::invalid_argument("exhaustive_search: bad k range");
  if (!spec.n_max) throw std::invalid_argument("exhaustive_search: n bound missing");
  if (spec.targeted && spec.filter != AFilter::equal_n_minus_2) {
    throw std::invalid_argument("exhaustive_search: targeted scan needs the a = n-2 filter");
  }
  const auto count = static_cast<std::size_t>(spec.k_max - spec.k_min + 1);
  std::vector<std::vector<SolutionRecord>> per_k(count);
  std::mutex callback_mutex;
  parallel_for(count, spec.jobs, [&](std::size_t i) {
    const int k = spec.k_min + static_cast<int>(i);
    if (auto it = spec.resume.find(k); it != spec.resume.end()) {
      per_k[i] = it->second;
      return;
    }
    const long n_hi = spec.n_max(k);
    const long n_lo = k + 2;
    std::vector<SolutionRecord> hits;
    if (n_hi >= n_lo) {
      const KFibTable table = generate(k, n_hi);
      hits = spec.targeted ? scan_targeted(table, n_lo, n_hi, spec.m_min)
                           : scan_pairwise(table, n_lo, n_hi, spec.m_min, spec.filter);
    }
    hits = fold_m_one(std::move(hits));
    if (spec.on_complete) {
      std::lock_guard<std::mutex> lock(callback_mutex);
      spec.on_complete(k, hits);
    }
    per_k[i] = std::move(hits);
  });
  std::vector<SolutionRecord> out;
  for (auto& v : per_k) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

}  // namespace kfsum
