// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Dense integer polynomials (ascending coefficients) and the resultant
// machinery used to obtain minimal polynomials of algebraic numbers.

#pragma once

#include "kfsum/interval.hpp"

#include <gmpxx.h>

#include <vector>

namespace kfsum {

using IntPoly = std::vector<mpz_class>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// -1 for the zero polynomial.
int degree(const IntPoly& p);
IntPoly trimmed(IntPoly p);
mpz_class content(const IntPoly& p);
/// Divides out the content and makes the leading coefficient positive.
IntPoly primitive_part(IntPoly p);

mpz_class evaluate(const IntPoly& p, const mpz_class& x);
Interval evaluate(const IntPoly& p, const Interval& x);
ComplexInterval evaluate(const IntPoly& p, const ComplexInterval& z);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
mpz_class determinant(IntMatrix m);

/// Sylvester matrix of p and q (both non-zero), size deg p + deg q.
IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q);
mpz_class resultant(const IntPoly& p, const IntPoly& q);

/// The unique polynomial of degree < points.size() through (points[i], values[i]).
/// Throws std::domain_error when the interpolant has non-integer coefficients.
IntPoly interpolate(const std::vector<mpz_class>& points, const std::vector<mpz_class>& values);

/// Res_x(p(x), q(x, y)) as a polynomial in y, where q is given by its
/// x-coefficients: q(x, y) = sum_i q_by_x_power[i](y) x^i. Computed by
/// evaluating Sylvester determinants at enough integer y and interpolating.
IntPoly resultant_in_y(const IntPoly& p, const std::vector<IntPoly>& q_by_x_power);

}  // namespace kfsum
