// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kfsum {

int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) return i;
  }
  return -1;
}

IntPoly trimmed(IntPoly p) {
  p.resize(static_cast<std::size_t>(degree(p) + 1));
  return p;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(IntPoly p) {
  p = trimmed(std::move(p));
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

mpz_class evaluate(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval evaluate(const IntPoly& p, const Interval& x) {
  Interval acc(0L, x.precision());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Interval(*it, x.precision());
  return acc;
}

ComplexInterval evaluate(const IntPoly& p, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.precision();
  ComplexInterval acc(Interval(0L, prec), Interval(0L, prec));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + Interval(*it, prec);
  return acc;
}

mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q) {
  const int dp = degree(p);
  const int dq = degree(q);
  if (dp < 0 || dq < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const auto size = static_cast<std::size_t>(dp + dq);
  IntMatrix s(size, std::vector<mpz_class>(size, 0));
  // rows 0..dq-1: shifted p; rows dq..: shifted q; columns by descending power
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - i)] = p[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) {
      s[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - i)] = q[static_cast<std::size_t>(i)];
    }
  }
  return s;
}

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (degree(p) == 0 && degree(q) == 0) return 1;
  return determinant(sylvester_matrix(p, q));
}

IntPoly interpolate(const std::vector<mpz_class>& points, const std::vector<mpz_class>& values) {
  if (points.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = points.size();
  // Newton divided differences over Q, then expand into the monomial basis.
  std::vector<mpq_class> coef(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / mpq_class(points[i] - points[i - level]);
      if (i == level) break;
    }
  }
  std::vector<mpq_class> poly(n, 0);
  std::vector<mpq_class> basis{1};  // prod_{j<i} (y - points[j])
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[i] * basis[d];
    std::vector<mpq_class> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * mpq_class(points[i]);
    }
    basis = std::move(next);
  }
  IntPoly out;
  out.reserve(n);
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::domain_error("interpolate: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return trimmed(std::move(out));
}

IntPoly resultant_in_y(const IntPoly& p, const std::vector<IntPoly>& q_by_x_power) {
  const int dp = degree(p);
  int dq = -1;
  int y_degree = 0;
  for (std::size_t i = 0; i < q_by_x_power.size(); ++i) {
    if (degree(q_by_x_power[i]) >= 0) dq = static_cast<int>(i);
    y_degree = std::max(y_degree, degree(q_by_x_power[i]));
  }
  if (dp < 1 || dq < 1) throw std::invalid_argument("resultant_in_y: need positive x-degrees");
  const auto samples = static_cast<std::size_t>(dp * y_degree + 1);

  std::vector<mpz_class> points;
  std::vector<mpz_class> values;
  // Skip sample points where the x-leading coefficient of q vanishes, since
  // the specialized Sylvester matrix would then have the wrong shape.
  for (long y = 0; points.size() < samples; ++y) {
    const mpz_class yy(y);
    if (sgn(evaluate(q_by_x_power[static_cast<std::size_t>(dq)], yy)) == 0) continue;
    IntPoly q;
    q.reserve(static_cast<std::size_t>(dq + 1));
    for (int i = 0; i <= dq; ++i) q.push_back(evaluate(q_by_x_power[static_cast<std::size_t>(i)], yy));
    points.push_back(yy);
    values.push_back(resultant(p, q));
  }
  return interpolate(points, values);
}

}  // namespace kfsum
