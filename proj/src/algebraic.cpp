// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kfsum {

namespace {

struct Mpfr {
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_t v;
};

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
}

// g(x) = x^k (x - 2) + 1 = (x - 1) Psi_k(x). On x > 1 it has the sign of
// Psi_k and is far better conditioned near 2.
Interval shifted_char_poly(int k, const Interval& x) { return pow(x, k) * (x - 2L) + 1L; }

bool psi_changes_sign(int k, const Interval& alpha) {
  const Interval lo = Interval::point(alpha.lower());
  const Interval hi = Interval::point(alpha.upper());
  if (!lo.certainly_greater(1)) return false;
  return shifted_char_poly(k, lo).certainly_negative() && shifted_char_poly(k, hi).certainly_positive();
}

// 2(1 - 2^{-k}) < alpha < 2
bool inside_bracket(int k, const Interval& alpha) {
  const mpfr_prec_t prec = alpha.precision() + 8;
  Interval left = Interval(2L, prec) - pow(Interval(2L, prec), 1 - k);
  return left.certainly_less(alpha) && alpha.certainly_less(Interval(2L, prec));
}

RootContext finish_dominant(int k, long digits, Interval alpha) {
  if (!psi_changes_sign(k, alpha)) {
    throw PrecisionError("dominant root: no certified sign change of Psi_" + std::to_string(k));
  }
  if (!inside_bracket(k, alpha)) {
    throw PrecisionError("dominant root: enclosure not inside (2(1-2^-k), 2) for k=" + std::to_string(k));
  }
  RootContext ctx;
  ctx.k = k;
  ctx.digits = digits;
  ctx.f_alpha = f_k_eval(k, alpha);
  ctx.alpha = std::move(alpha);
  return ctx;
}

using Cplx = std::complex<double>;

// Aberth-Ehrlich iteration in double precision for all k roots of Psi_k.
std::vector<Cplx> approximate_roots(int k) {
  auto eval = [k](Cplx z, Cplx& deriv) {
    Cplx p = 1.0;
    Cplx dp = 0.0;
    for (int i = 0; i < k; ++i) {
      dp = dp * z + p;
      p = p * z - 1.0;
    }
    deriv = dp;
    return p;
  };
  std::vector<Cplx> z(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / k + 0.4;
    z[static_cast<std::size_t>(j)] = std::polar(1.1, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Cplx dp;
      const Cplx p = eval(z[i], dp);
      const Cplx ratio = p / dp;
      Cplx sum = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const Cplx step = ratio / (1.0 - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

ComplexInterval complex_point(const Interval& re, const Interval& im) {
  Mpfr a(re.precision());
  Mpfr b(im.precision());
  re.midpoint(a.v);
  im.midpoint(b.v);
  return ComplexInterval(Interval::point(a.v), Interval::point(b.v));
}

ComplexInterval complex_from_double(Cplx z, mpfr_prec_t prec) {
  Mpfr a(prec);
  Mpfr b(prec);
  mpfr_set_d(a.v, z.real(), MPFR_RNDN);
  mpfr_set_d(b.v, z.imag(), MPFR_RNDN);
  return ComplexInterval(Interval::point(a.v), Interval::point(b.v));
}

// Psi_k and Psi_k' at z by Horner.
void psi_and_derivative(int k, const ComplexInterval& z, ComplexInterval& p, ComplexInterval& dp) {
  const mpfr_prec_t prec = z.precision();
  p = ComplexInterval(Interval(1L, prec), Interval(0L, prec));
  dp = ComplexInterval(Interval(0L, prec), Interval(0L, prec));
  const Interval minus_one(-1L, prec);
  for (int i = 0; i < k; ++i) {
    dp = dp * z + p;
    p = p * z + minus_one;
  }
}

// Binary exponent of the larger component of z's midpoint; LONG_MIN for 0.
long magnitude_exponent(const ComplexInterval& z) {
  Mpfr a(z.precision());
  Mpfr b(z.precision());
  z.re().midpoint(a.v);
  z.im().midpoint(b.v);
  long e = std::numeric_limits<long>::min();
  if (!mpfr_zero_p(a.v)) e = std::max<long>(e, mpfr_get_exp(a.v));
  if (!mpfr_zero_p(b.v)) e = std::max<long>(e, mpfr_get_exp(b.v));
  return e;
}

ComplexInterval refine_root(int k, ComplexInterval z, mpfr_prec_t prec) {
  const long target = -static_cast<long>(prec) + 16;
  for (int iter = 0; iter < 200; ++iter) {
    ComplexInterval p(prec);
    ComplexInterval dp(prec);
    psi_and_derivative(k, z, p, dp);
    ComplexInterval step = p / dp;
    z = complex_point(z.re() - step.re(), z.im() - step.im());
    if (magnitude_exponent(step) < target) break;
  }
  return z;
}

}  // namespace

CharPoly CharPoly::of(int k) {
  check_k(k);
  CharPoly out;
  out.k = k;
  out.coefficients.assign(static_cast<std::size_t>(k + 1), mpz_class(-1));
  out.coefficients.back() = 1;
  return out;
}

mpfr_prec_t root_bits(int k, long digits) { return bits_for_digits(digits) + k + 40; }

RootContext dominant_root(int k, long digits) {
  check_k(k);
  if (digits < 16) throw std::invalid_argument("dominant_root: need at least 16 digits");
  const mpfr_prec_t bits = root_bits(k, digits);
  const mpfr_prec_t work = bits + 32;

  // Newton on g(x) = x^k (x-2) + 1 from x = 2; g is convex on [alpha, 2] so
  // the iterates decrease monotonically to alpha.
  Mpfr x(work);
  Mpfr xk(work);
  Mpfr g(work);
  Mpfr dg(work);
  Mpfr t(work);
  mpfr_set_ui(x.v, 2, MPFR_RNDN);
  Mpfr tol(work);
  mpfr_set_ui_2exp(tol.v, 1, -(bits + 8), MPFR_RNDN);
  for (int iter = 0; iter < 100000; ++iter) {
    mpfr_pow_ui(xk.v, x.v, static_cast<unsigned long>(k - 1), MPFR_RNDN);  // x^{k-1}
    mpfr_mul_ui(t.v, x.v, static_cast<unsigned long>(k + 1), MPFR_RNDN);
    mpfr_sub_ui(t.v, t.v, static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_mul(dg.v, xk.v, t.v, MPFR_RNDN);                                   // g'(x)
    mpfr_mul(xk.v, xk.v, x.v, MPFR_RNDN);                                   // x^k
    mpfr_sub_ui(t.v, x.v, 2, MPFR_RNDN);
    mpfr_mul(g.v, xk.v, t.v, MPFR_RNDN);
    mpfr_add_ui(g.v, g.v, 1, MPFR_RNDN);                                    // g(x)
    mpfr_div(t.v, g.v, dg.v, MPFR_RNDN);
    mpfr_sub(x.v, x.v, t.v, MPFR_RNDN);
    mpfr_abs(t.v, t.v, MPFR_RNDN);
    if (mpfr_cmp(t.v, tol.v) < 0) break;
  }
  Mpfr radius(work);
  mpfr_set_ui_2exp(radius.v, 1, -(bits_for_digits(digits) + 4), MPFR_RNDN);
  return finish_dominant(k, digits, Interval::around(x.v, radius.v, bits));
}

RootContext dominant_root_from_digits(int k, long digits, const std::string& decimal) {
  check_k(k);
  const mpfr_prec_t bits = root_bits(k, digits);
  Interval center = Interval::from_decimal(decimal, bits);
  Interval radius = Interval::from_decimal("1e-" + std::to_string(digits), bits);
  Interval alpha = center - radius;
  alpha = Interval::hull(alpha, center + radius);
  return finish_dominant(k, digits, std::move(alpha));
}

std::string alpha_digits(const RootContext& ctx, long digits) {
  Mpfr mid(ctx.alpha.precision());
  ctx.alpha.midpoint(mid.v);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), mid.v);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

RootContext conjugate_roots(int k, long digits) {
  RootContext ctx = dominant_root(k, digits);
  const mpfr_prec_t prec = ctx.bits();

  std::vector<Cplx> approx = approximate_roots(k);
  // The dominant root is the one with the largest real part.
  const auto dominant = std::max_element(approx.begin(), approx.end(),
                                         [](Cplx a, Cplx b) { return a.real() < b.real(); });
  approx.erase(dominant);

  // nodes[0] is alpha's midpoint, the rest are refined conjugates.
  std::vector<ComplexInterval> nodes;
  nodes.reserve(static_cast<std::size_t>(k));
  nodes.push_back(complex_point(ctx.alpha, Interval(0L, prec)));
  for (Cplx z : approx) nodes.push_back(refine_root(k, complex_from_double(z, prec), prec));

  // Weierstrass corrections W_i = Psi(z_i) / prod_{j != i}(z_i - z_j); every
  // root lies in the union of the disks D(z_i, k|W_i|) and each connected
  // component holds as many roots as disks.
  std::vector<Interval> radii;
  radii.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ComplexInterval p(prec);
    ComplexInterval dp(prec);
    psi_and_derivative(k, nodes[i], p, dp);
    ComplexInterval denom(Interval(1L, prec), Interval(0L, prec));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i) denom *= nodes[i] - nodes[j];
    }
    ComplexInterval w = p / denom;
    Interval r = w.abs() * static_cast<long>(k);
    radii.push_back(Interval::point(r.upper()));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      Interval gap = (nodes[i] - nodes[j]).abs();
      if (!(radii[i] + radii[j]).certainly_less(gap)) {
        throw PrecisionError("conjugate_roots: inclusion disks overlap for k=" + std::to_string(k));
      }
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Interval& r = radii[i];
    Interval re = Interval::hull(nodes[i].re() - r, nodes[i].re() + r);
    Interval im = Interval::hull(nodes[i].im() - r, nodes[i].im() + r);
    ComplexInterval box(std::move(re), std::move(im));
    ctx.f_conjugates.push_back(f_k_eval(k, box));
    ctx.conjugates.push_back(std::move(box));
  }
  // The disk around alpha's midpoint must be the one holding alpha.
  Interval alpha_disk = Interval::hull(nodes[0].re() - radii[0], nodes[0].re() + radii[0]);
  if (alpha_disk.certainly_less(ctx.alpha) || ctx.alpha.certainly_less(alpha_disk)) {
    throw PrecisionError("conjugate_roots: dominant disk does not meet alpha");
  }
  return ctx;
}

Interval f_k_eval(int k, const Interval& x) {
  Interval den = (x - 2L) * static_cast<long>(k + 1) + 2L;
  if (den.contains_zero()) throw PrecisionError("f_k: denominator encloses zero");
  return (x - 1L) / den;
}

ComplexInterval f_k_eval(int k, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.precision();
  ComplexInterval shifted = z + Interval(-2L, prec);
  ComplexInterval den = shifted * Interval(static_cast<long>(k + 1), prec) + Interval(2L, prec);
  if (den.contains_zero()) throw PrecisionError("f_k: denominator encloses zero");
  return (z + Interval(-1L, prec)) / den;
}

Interval binet_dominant(const RootContext& ctx, long n, const KFibTable& table) {
  if (n < 2 - ctx.k) throw std::invalid_argument("binet_dominant: n < 2-k");
  Interval value = ctx.f_alpha * pow(ctx.alpha, n - 1);
  Interval distance = abs(value - table.at(n));
  if (!distance.certainly_less(Interval(mpq_class(1, 2), ctx.bits()))) {
    throw PrecisionError("binet_dominant: |F_n - f(alpha) alpha^(n-1)| < 1/2 not certified at n=" +
                         std::to_string(n));
  }
  return value;
}

Interval binet_full(const RootContext& ctx, long n) {
  if (!ctx.has_conjugates()) throw std::invalid_argument("binet_full: context has no conjugates");
  const mpfr_prec_t prec = ctx.bits();
  ComplexInterval sum(ctx.f_alpha * pow(ctx.alpha, n - 1), Interval(0L, prec));
  for (std::size_t i = 0; i < ctx.conjugates.size(); ++i) {
    sum += ctx.f_conjugates[i] * pow(ctx.conjugates[i], n - 1);
  }
  if (!sum.im().contains_zero() || !sum.re().unique_integer()) {
    throw PrecisionError("binet_full: enclosure does not isolate an integer at n=" + std::to_string(n));
  }
  return sum.re();
}

DeltaEtaDecomposition delta_eta_decompose(const RootContext& ctx, long r) {
  if (r <= 1) throw std::invalid_argument("delta_eta_decompose: need r > 1");
  const mpz_class rm1(r - 1);
  if (rm1 * rm1 >= power_of_two(static_cast<unsigned long>(ctx.k))) {
    throw std::invalid_argument("delta_eta_decompose: need r - 1 < 2^(k/2)");
  }
  const mpfr_prec_t prec = ctx.bits();
  const Interval two(2L, prec);
  const Interval alpha_pow = pow(ctx.alpha, r - 1);
  const Interval two_pow = pow(two, r - 1);

  DeltaEtaDecomposition out;
  out.k = ctx.k;
  out.r = r;
  out.delta = alpha_pow - two_pow;
  out.eta = ctx.f_alpha - Interval(mpq_class(1, 2), prec);
  out.recomposition = ctx.f_alpha * alpha_pow -
                      (pow(two, r - 2) + out.delta / 2L + two_pow * out.eta + out.eta * out.delta);
  out.delta_bound = pow(two, r) / pow(sqrt(two), ctx.k);
  out.eta_bound = Interval(static_cast<long>(2 * ctx.k), prec) / pow(two, ctx.k);
  return out;
}

Interval height_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
  if (q <= 0) throw std::invalid_argument("height_rational: denominator must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::invalid_argument("height_rational: fraction is not reduced");
  const mpz_class big = std::max<mpz_class>(abs(p), q);
  return log(Interval(big, prec));
}

Interval height_from_minimal_polynomial(const IntPoly& minimal_polynomial,
                                        const std::vector<Interval>& real_roots,
                                        const std::vector<ComplexInterval>& complex_roots) {
  const int d = degree(minimal_polynomial);
  if (d < 1) throw std::invalid_argument("height: polynomial must have positive degree");
  if (static_cast<std::size_t>(d) != real_roots.size() + complex_roots.size()) {
    throw std::invalid_argument("height: root count does not match degree");
  }
  const mpz_class& lead = minimal_polynomial[static_cast<std::size_t>(d)];
  if (lead <= 0) throw std::invalid_argument("height: leading coefficient must be positive");

  mpfr_prec_t prec = 64;
  for (const auto& r : real_roots) prec = std::max(prec, r.precision());
  for (const auto& z : complex_roots) prec = std::max(prec, z.precision());

  const Interval one(1L, prec);
  Interval sum = log(Interval(lead, prec));
  auto add_modulus = [&](const Interval& modulus) {
    if (modulus.certainly_less(one)) return;  // log max(|x|, 1) = 0
    sum += log(max_with(modulus, one));
  };
  for (const auto& r : real_roots) add_modulus(abs(r));
  for (const auto& z : complex_roots) add_modulus(z.abs());
  return sum / static_cast<long>(d);
}

HeightReport height_f_k(const RootContext& full_ctx, int cap) {
  const int k = full_ctx.k;
  if (k > cap) throw std::invalid_argument("height_f_k: k exceeds the degree cap");
  if (!full_ctx.has_conjugates()) throw std::invalid_argument("height_f_k: context has no conjugates");

  // y (2 + (k+1)(x-2)) - (x-1) = ((k+1) y - 1) x + (1 - 2k y)
  const std::vector<IntPoly> q = {IntPoly{1, -2L * k}, IntPoly{-1, k + 1L}};
  IntPoly minimal = primitive_part(resultant_in_y(CharPoly::of(k).coefficients, q));
  if (degree(minimal) != k) throw std::logic_error("height_f_k: resultant has unexpected degree");

  // Q(f_k(alpha)) = Q(alpha) has degree k, so the primitive degree-k
  // resultant is the minimal polynomial; confirm it vanishes at every image.
  if (!evaluate(minimal, full_ctx.f_alpha).contains_zero()) {
    throw PrecisionError("height_f_k: minimal polynomial does not vanish at f_k(alpha)");
  }
  for (const auto& z : full_ctx.f_conjugates) {
    if (!evaluate(minimal, z).contains_zero()) {
      throw PrecisionError("height_f_k: minimal polynomial does not vanish at a conjugate image");
    }
  }

  HeightReport out;
  out.k = k;
  out.height = height_from_minimal_polynomial(minimal, {full_ctx.f_alpha}, full_ctx.f_conjugates);
  out.bound = log(Interval(static_cast<long>(k), full_ctx.bits())) * 3L;
  out.minimal_polynomial = std::move(minimal);
  return out;
}

Interval height_alpha(const RootContext& full_ctx) {
  if (!full_ctx.has_conjugates()) throw std::invalid_argument("height_alpha: context has no conjugates");
  return height_from_minimal_polynomial(CharPoly::of(full_ctx.k).coefficients, {full_ctx.alpha},
                                        full_ctx.conjugates);
}

}  // namespace kfsum
