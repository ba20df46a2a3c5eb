// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Certified numerics for the characteristic polynomial
//
//   Psi_k(x) = x^k - x^{k-1} - ... - x - 1,
//
// its dominant (Pisot) root alpha(k) and the k-1 conjugates inside the unit
// disc, the rational function f_k(x) = (x-1) / (2 + (k+1)(x-2)) that weights
// the roots in the Binet-like formula, and logarithmic heights.

#pragma once

#include "kfsum/interval.hpp"
#include "kfsum/kfib.hpp"
#include "kfsum/polynomial.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kfsum {

struct CharPoly {
  int k = 0;
  IntPoly coefficients;  // ascending; leading 1, all others -1

  static CharPoly of(int k);
};

struct RootContext {
  int k = 0;
  long digits = 0;  // requested working precision, decimal digits
  Interval alpha;
  Interval f_alpha;
  std::vector<ComplexInterval> conjugates;    // empty unless built by conjugate_roots
  std::vector<ComplexInterval> f_conjugates;

  mpfr_prec_t bits() const { return alpha.precision(); }
  bool has_conjugates() const { return !conjugates.empty(); }
};

/// Working precision in bits used for a (k, digits) context. The extra k bits
/// keep 2 - alpha (about 2^{-k}) resolved.
mpfr_prec_t root_bits(int k, long digits);

/// Enclosure of the root of Psi_k in (1, 2) with width <= 10^{-digits},
/// certified by a sign change of Psi_k at both endpoints. Also fills f_alpha.
/// Throws PrecisionError if the sign change cannot be certified.
RootContext dominant_root(int k, long digits);

/// Re-certifies a decimal approximation of alpha(k) (for instance one read
/// from a cache): the enclosure [x - 10^{-digits}, x + 10^{-digits}] must show
/// a sign change of Psi_k. Throws PrecisionError otherwise.
RootContext dominant_root_from_digits(int k, long digits, const std::string& decimal);

/// Decimal digits of the midpoint of ctx.alpha (digits after the point).
std::string alpha_digits(const RootContext& ctx, long digits);

/// Full context: alpha plus k-1 conjugate enclosures, each certified to hold
/// exactly one root via Weierstrass-correction disks (all disks pairwise
/// disjoint). Throws PrecisionError when the disks cannot be separated.
RootContext conjugate_roots(int k, long digits);

/// f_k(x) = (x-1) / (2 + (k+1)(x-2)). Throws PrecisionError if the
/// denominator enclosure reaches zero.
Interval f_k_eval(int k, const Interval& x);
ComplexInterval f_k_eval(int k, const ComplexInterval& z);

/// Enclosure of f_k(alpha) alpha^{n-1}, checked to lie within 1/2 of the
/// exact F_n taken from `table`. Throws PrecisionError if that distance is
/// not certified.
Interval binet_dominant(const RootContext& ctx, long n, const KFibTable& table);

/// Real enclosure of sum_i f_k(alpha_i) alpha_i^{n-1} over all k roots.
/// Throws PrecisionError unless the enclosure holds exactly one integer and
/// its imaginary part encloses zero.
Interval binet_full(const RootContext& ctx, long n);

struct DeltaEtaDecomposition {
  int k = 0;
  long r = 0;
  Interval delta;          // alpha^{r-1} - 2^{r-1}
  Interval eta;            // f_k(alpha) - 1/2
  Interval recomposition;  // f_k(alpha) alpha^{r-1} - (2^{r-2} + delta/2 + 2^{r-1} eta + eta delta)
  Interval delta_bound;    // 2^r / 2^{k/2}
  Interval eta_bound;      // 2k / 2^k

  bool recomposition_encloses_zero() const { return recomposition.contains_zero(); }
  bool delta_within_bound() const { return abs(delta).certainly_less(delta_bound); }
  bool eta_within_bound() const { return abs(eta).certainly_less(eta_bound); }
  bool certified() const {
    return recomposition_encloses_zero() && delta_within_bound() && eta_within_bound();
  }
};

/// Requires r > 1 and r - 1 < 2^{k/2}; throws std::invalid_argument otherwise.
DeltaEtaDecomposition delta_eta_decompose(const RootContext& ctx, long r);

/// h(p/q) = log max(|p|, q) for a reduced fraction with q > 0.
Interval height_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec = 128);

/// (1/d)(log a_0 + sum log max(|root|, 1)) for a primitive minimal polynomial
/// with positive leading coefficient a_0 and enclosures of all its roots.
Interval height_from_minimal_polynomial(const IntPoly& minimal_polynomial,
                                        const std::vector<Interval>& real_roots,
                                        const std::vector<ComplexInterval>& complex_roots);

struct HeightReport {
  int k = 0;
  IntPoly minimal_polynomial;  // of f_k(alpha), primitive, ascending
  Interval height;
  Interval bound;  // 3 log k
  bool below_bound() const { return height.certainly_less(bound); }
};

inline constexpr int kHeightDegreeCap = 15;

/// Minimal polynomial of f_k(alpha) from Res_x(Psi_k(x), y(2+(k+1)(x-2)) - (x-1)),
/// made primitive, checked to vanish at every f_k(alpha_i), and its height.
/// Throws std::invalid_argument when k exceeds `cap`.
HeightReport height_f_k(const RootContext& full_ctx, int cap = kHeightDegreeCap);

/// Height of alpha itself from Psi_k: (log alpha) / k.
Interval height_alpha(const RootContext& full_ctx);

}  // namespace kfsum
