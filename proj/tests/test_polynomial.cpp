// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfsum/polynomial.hpp"

using namespace kfsum;

TEST_CASE("degree, content, primitive part") {
  IntPoly p{6, -4, 2, 0, 0};
  CHECK(degree(p) == 2);
  CHECK(trimmed(p).size() == 3);
  CHECK(content(p) == 2);
  CHECK(primitive_part(p) == IntPoly{3, -2, 1});
  CHECK(primitive_part(IntPoly{-6, 4, -2}) == IntPoly{3, -2, 1});
  CHECK(degree(IntPoly{0, 0}) == -1);
}

TEST_CASE("evaluation") {
  IntPoly p{-1, -1, 1};  // x^2 - x - 1
  CHECK(evaluate(p, mpz_class(3)) == 5);
  Interval phi = (sqrt(Interval(5L, 200)) + 1L) / 2L;
  CHECK(evaluate(p, phi).contains_zero());
}

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(determinant({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("resultant of linear and quadratic polynomials") {
  // Res(x - a, q) = q(a) for monic linear first argument (up to sign convention)
  IntPoly lin{-3, 1};
  IntPoly q{2, 0, 1};  // x^2 + 2
  CHECK(resultant(lin, q) == 11);
  // common root gives zero
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == 0);
}

TEST_CASE("interpolation recovers integer polynomials") {
  IntPoly target{5, -3, 0, 2};
  std::vector<mpz_class> xs;
  std::vector<mpz_class> ys;
  for (long x = -2; x <= 1; ++x) {
    xs.emplace_back(x);
    ys.push_back(evaluate(target, mpz_class(x)));
  }
  CHECK(interpolate(xs, ys) == target);
  CHECK_THROWS_AS(interpolate({0, 2}, {0, 1}), std::domain_error);
}

namespace {

// Closed form of Res_x(Psi_k(x), ((k+1)y-1)x + (1-2ky)) up to sign: the
// homogenization of Psi_k evaluated at x = (2ky-1)/((k+1)y-1).
IntPoly closed_form_resultant(int k) {
  IntPoly num{-1, 2L * k};
  IntPoly den{-1, k + 1L};
  auto mul = [](const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  auto power = [&](const IntPoly& a, int e) {
    IntPoly out{1};
    for (int i = 0; i < e; ++i) out = mul(out, a);
    return out;
  };
  IntPoly total(static_cast<std::size_t>(k + 1), 0);
  for (int j = 0; j <= k; ++j) {
    const long coeff = j == k ? 1 : -1;
    IntPoly term = mul(power(num, j), power(den, k - j));
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += coeff * term[i];
  }
  return primitive_part(total);
}

}  // namespace

TEST_CASE("resultant in y agrees with the homogenized closed form") {
  for (int k = 2; k <= 9; ++k) {
    IntPoly psi(static_cast<std::size_t>(k + 1), -1);
    psi.back() = 1;
    const std::vector<IntPoly> q = {IntPoly{1, -2L * k}, IntPoly{-1, k + 1L}};
    CHECK(primitive_part(resultant_in_y(psi, q)) == closed_form_resultant(k));
  }
  IntPoly psi2{-1, -1, 1};
  const std::vector<IntPoly> q2 = {IntPoly{1, -4}, IntPoly{-1, 3}};
  CHECK(primitive_part(resultant_in_y(psi2, q2)) == IntPoly{1, -5, 5});
}
