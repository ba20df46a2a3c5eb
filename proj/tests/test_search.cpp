// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfsum/search.hpp"

#include <set>
#include <tuple>

using namespace kfsum;

namespace {

using Triple = std::tuple<long, long, long>;

// Independent oracle: naive recurrence with plain integer addition and a
// repeated-halving power-of-two test.
std::set<std::tuple<int, long, long, long>> naive_solutions(int k_lo, int k_hi, long n_max) {
  std::set<std::tuple<int, long, long, long>> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    std::vector<mpz_class> f(static_cast<std::size_t>(n_max + 1), 0);
    f[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
      for (long j = 1; j <= k && n - j >= 1; ++j) f[static_cast<std::size_t>(n)] += f[static_cast<std::size_t>(n - j)];
    }
    for (long n = 1; n <= n_max; ++n) {
      for (long m = 1; m <= n; ++m) {
        mpz_class s = f[static_cast<std::size_t>(n)] + f[static_cast<std::size_t>(m)];
        long a = 0;
        while (s > 1 && s % 2 == 0) {
          s /= 2;
          ++a;
        }
        if (s == 1) out.emplace(k, n, m, a);
      }
    }
  }
  return out;
}

// The three families restricted to n <= n_max, m listed literally (m = 1
// twins included).
std::set<std::tuple<int, long, long, long>> family_union(int k_lo, int k_hi, long n_max) {
  std::set<std::tuple<int, long, long, long>> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    out.emplace(k, 1, 1, 1);
    out.emplace(k, 2, 1, 1);
    for (long t = 2; t <= k + 1 && t <= n_max; ++t) out.emplace(k, t, t, t - 1);
    for (int ell = 1; (1L << ell) + ell - 2 <= k; ++ell) {
      const long p = 1L << ell;
      if (k + p > n_max) continue;
      out.emplace(k, k + p, p + ell - 1, k + p - 2);
      if (p + ell - 1 == 2) out.emplace(k, k + p, 1, k + p - 2);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("verify equation examples") {
  CHECK(verify_equation(3, 2, 1) == 1L);
  CHECK(verify_equation(3, 5, 2) == 3L);
  CHECK_FALSE(verify_equation(3, 6, 4).has_value());
  CHECK_THROWS_AS(verify_equation(3, 2, 3), std::invalid_argument);
}

TEST_CASE("parametric family") {
  auto c3 = family_c_enumerate(3);
  REQUIRE(c3.size() == 1);
  CHECK(std::tie(c3[0].n, c3[0].m, c3[0].a) == Triple{5, 2, 3});
  auto c6 = family_c_enumerate(6);
  REQUIRE(c6.size() == 2);
  CHECK(std::tie(c6[0].n, c6[0].m, c6[0].a) == Triple{8, 2, 6});
  CHECK(std::tie(c6[1].n, c6[1].m, c6[1].a) == Triple{10, 5, 8});
  auto c4 = family_c_enumerate(4);
  REQUIRE(c4.size() == 2);
  CHECK(std::tie(c4[0].n, c4[0].m, c4[0].a) == Triple{6, 2, 4});
  CHECK(std::tie(c4[1].n, c4[1].m, c4[1].a) == Triple{8, 5, 6});
  for (int k = 3; k <= 200; ++k) {
    for (const auto& r : family_c_enumerate(k)) {
      CHECK(r.family == Family::parametric);
      CHECK(r.a_relation == ARelation::equal_n_minus_2);
      CHECK(r.n <= 2 * k + 1);
      CHECK(r.m <= k + 1);
    }
  }
}

TEST_CASE("classification") {
  SolutionRecord c = classify(7, 9, 2, 7);
  CHECK(c.family == Family::parametric);
  CHECK(c.ell == 1);
  CHECK(c.family_name() == "C_parametric(1)");
  CHECK(classify(5, 2, 1, 1).family == Family::sporadic);
  CHECK(classify(5, 2, 1, 1).family_name() == "B_sporadic");
  CHECK(classify(4, 3, 3, 2).family == Family::diagonal);
  CHECK(classify(4, 1, 1, 1).family == Family::diagonal);
  CHECK(classify(4, 6, 6, 5).family == Family::unexpected);  // t = 6 > k + 1
  CHECK(classify(7, 9, 1, 7).family == Family::parametric);   // F_1 = F_2
  CHECK(classify(7, 9, 3, 7).family == Family::unexpected);
  CHECK(classify(7, 9, 2, 7).a_relation == ARelation::equal_n_minus_2);
  CHECK(classify(7, 9, 2, 5).a_relation == ARelation::below_n_minus_2);
  CHECK(classify(4, 3, 3, 2).a_relation == ARelation::above_n_minus_2);
}

TEST_CASE("pure powers") {
  using P = std::vector<std::pair<long, long>>;
  CHECK(pure_power_scan(3, 680) == P{{1, 1}, {2, 1}, {3, 2}, {4, 3}});
  P five;
  five.emplace_back(1, 1);
  for (long t = 2; t <= 6; ++t) five.emplace_back(t, t - 1);
  CHECK(pure_power_scan(5, 680) == five);
  CHECK(pure_power_scan(3, 4) == P{{1, 1}, {2, 1}, {3, 2}, {4, 3}});
  CHECK(pure_power_scan(3, 2) == P{{1, 1}, {2, 1}});
}

TEST_CASE("small indices") {
  auto s = small_index_solutions(3);
  CHECK(s.size() == 5);  // (1,1,1) (2,1,1) (2,2,1) (3,3,2) (4,4,3)
  for (const auto& r : s) {
    CHECK(r.family != Family::unexpected);
    CHECK(verify_equation(3, r.n, r.m) == r.a);
  }
}

TEST_CASE("small box search") {
  SearchSpec spec;
  spec.k_min = 3;
  spec.k_max = 3;
  spec.n_max = [](int) { return 20L; };
  spec.m_min = 1;
  spec.filter = AFilter::all;
  auto hits = exhaustive_search(spec);
  REQUIRE(hits.size() == 1);
  CHECK(std::tie(hits[0].n, hits[0].m, hits[0].a) == Triple{5, 2, 3});
}

TEST_CASE("completeness against the naive oracle") {
  const long n_max = 60;
  auto oracle = naive_solutions(3, 8, n_max);
  CHECK(oracle == family_union(3, 8, n_max));

  std::set<std::tuple<int, long, long, long>> found;
  for (int k = 3; k <= 8; ++k) {
    for (const auto& r : small_index_solutions(k)) found.emplace(k, r.n, r.m, r.a);
    // F_n = 2^{a-1} gives the diagonal solution (n, n, a)
    for (auto [n, a] : pure_power_scan(k, n_max)) found.emplace(k, n, n, a);
    KFibTable t = generate(k, n_max);
    for (const auto& r : scan_pairwise(t, k + 2, n_max, 1, AFilter::all)) {
      found.emplace(k, r.n, r.m, r.a);
      CHECK(r.family != Family::unexpected);
      CHECK(r.a <= r.n - 2);
      CHECK(verify_equation(generate(k, r.n), r.n, r.m) == r.a);
    }
  }
  CHECK(found == oracle);
}

TEST_CASE("targeted scan equals pairwise scan on a = n - 2") {
  for (int k = 3; k <= 8; ++k) {
    KFibTable t = generate(k, 300);
    auto pairwise = fold_m_one(scan_pairwise(t, k + 2, 300, 1, AFilter::equal_n_minus_2));
    auto targeted = fold_m_one(scan_targeted(t, k + 2, 300, 1));
    CHECK(pairwise == targeted);
    auto expected = family_c_enumerate(k);
    CHECK(targeted == expected);
  }
}

TEST_CASE("search output is independent of the worker count") {
  SearchSpec spec;
  spec.k_min = 3;
  spec.k_max = 40;
  spec.n_max = [](int k) { return 3L * k + 10; };
  spec.m_min = 2;
  spec.filter = AFilter::all;
  spec.jobs = 1;
  auto one = exhaustive_search(spec);
  spec.jobs = 4;
  auto four = exhaustive_search(spec);
  CHECK(one == four);
  std::size_t expected = 0;
  for (int k = 3; k <= 40; ++k) expected += family_c_enumerate(k).size();
  CHECK(one.size() == expected);
}

TEST_CASE("resume reuses stored hits and reports completions") {
  SearchSpec spec;
  spec.k_min = 3;
  spec.k_max = 6;
  spec.n_max = [](int k) { return 2L * k + 2; };
  spec.filter = AFilter::equal_n_minus_2;
  spec.targeted = true;
  spec.resume[4] = family_c_enumerate(4);
  std::vector<int> completed;
  spec.on_complete = [&](int k, const std::vector<SolutionRecord>&) { completed.push_back(k); };
  auto hits = exhaustive_search(spec);
  CHECK(completed == std::vector<int>{3, 5, 6});
  CHECK(hits.size() == 1 + 2 + 2 + 2);
  spec.filter = AFilter::all;
  CHECK_THROWS_AS(exhaustive_search(spec), std::invalid_argument);
}
