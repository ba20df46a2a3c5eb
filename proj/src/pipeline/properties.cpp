// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/properties.hpp"

#include "kfsum/algebraic.hpp"
#include "kfsum/errors.hpp"
#include "kfsum/kfib.hpp"
#include "kfsum/matveev.hpp"
#include "kfsum/parallel.hpp"
#include "kfsum/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace kfsum::pipeline {

namespace {

struct Tally {
  long checked = 0;
  std::string failure;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failure.empty()) failure = what;
  }
};

using Body = std::function<void(int k_lo, int k_hi, Tally&)>;

struct Property {
  const char* name;
  int k_lo;
  int k_hi;
  Body body;
};

std::string at(int k, long n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

// Plain recurrence with k-1 leading zeros, independent of the table code.
std::vector<mpz_class> naive_terms(int k, long n_max) {
  std::vector<mpz_class> v(static_cast<std::size_t>(n_max + k), 0);
  v[static_cast<std::size_t>(k - 1)] = 1;  // index i holds F_{i - k + 2}
  for (std::size_t i = static_cast<std::size_t>(k); i < v.size(); ++i) {
    for (int j = 1; j <= k; ++j) v[i] += v[i - static_cast<std::size_t>(j)];
  }
  return v;
}

void cooper_howard_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const auto oracle = naive_terms(k, 300);
    for (long n = k + 2; n <= 300; ++n) {
      t.check(cooper_howard(k, n) == oracle[static_cast<std::size_t>(n + k - 2)], at(k, n));
    }
  }
}

void segment_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const auto oracle = naive_terms(k, 2 * k + 2);
    for (long n = k + 2; n <= 2 * k + 2; ++n) {
      t.check(segment_closed_form(k, n) == oracle[static_cast<std::size_t>(n + k - 2)], at(k, n));
    }
  }
}

void terms_below_power_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const KFibTable table = generate(k, 400);
    for (long n = k + 2; n <= 400; ++n) {
      t.check(table[n] < power_of_two(static_cast<unsigned long>(n - 2)), at(k, n));
      t.check(term_three_recursion(table, n) == table[n], at(k, n));
    }
  }
}

void binet_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const RootContext ctx = dominant_root(k, 80);
    const KFibTable table = generate(k, 200);
    for (long n = 2 - k; n <= 200; ++n) {
      bool ok = true;
      try {
        binet_dominant(ctx, n, table);
      } catch (const PrecisionError&) {
        ok = false;
      }
      t.check(ok, at(k, n));
    }
  }
}

void root_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const RootContext c = conjugate_roots(k, 40);
    const mpfr_prec_t p = c.bits();
    const std::string tag = "k=" + std::to_string(k);
    const Interval two(2L, p);
    t.check((two - pow(two, 1 - k) * 2L).certainly_less(c.alpha) && c.alpha.certainly_less(two),
            tag + " alpha bracket");
    t.check(c.conjugates.size() == static_cast<std::size_t>(k - 1), tag + " conjugate count");
    Interval product = c.f_alpha;
    for (std::size_t i = 0; i < c.conjugates.size(); ++i) {
      t.check(c.conjugates[i].abs().certainly_less(1L), tag + " conjugate modulus");
      product *= c.f_conjugates[i].abs();
    }
    t.check(Interval(mpq_class(1, 2), p).certainly_less(c.f_alpha) &&
                c.f_alpha.certainly_less(Interval(mpq_class(3, 4), p)),
            tag + " f_k(alpha) range");
    t.check(product.certainly_positive() && product.certainly_less(1L), tag + " product of f_k");
  }
}

void delta_eta_property(int lo, int hi, Tally& t) {
  lo = std::max(lo, 4);
  if (lo > hi) return;
  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    const int k = lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
    const long cap = std::min<long>(5000L, static_cast<long>(std::ceil(std::sqrt(std::ldexp(1.0, k)))));
    long r = 2 + static_cast<long>(rng() % static_cast<unsigned long>(cap));
    while (mpz_class(r - 1) * (r - 1) >= power_of_two(static_cast<unsigned long>(k))) --r;
    if (r < 2) continue;
    t.check(delta_eta_decompose(dominant_root(k, 40 + k), r).certified(), "k=" + std::to_string(k) + " r=" +
                                                                        std::to_string(r));
  }
}

void height_property(int lo, int hi, Tally& t) {
  for (int k = lo; k <= hi; ++k) {
    const HeightReport h = height_f_k(conjugate_roots(k, 40));
    t.check(h.below_bound(), "k=" + std::to_string(k));
  }
}

void log_square_property(int, int, Tally& t) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> exponent(2.0, 30.0);
  for (int s = 0; s < 10000; ++s) {
    const Interval A(mpz_class(std::pow(10.0, exponent(rng))), 128);
    const Interval x = solve_log_square(A);
    t.check((A * sqr(log(x))).certainly_less(x), "A=" + A.to_string(8));
  }
}

constexpr mpfr_prec_t kP = 400;

// Every (u, v) with 1 <= u <= M must miss A B^{-w} for the first integer w
// above the returned bound.
void reduction_soundness_property(int, int, Tally& t) {
  std::mt19937_64 rng(77);
  const long radicands[] = {2, 3, 5, 6, 7, 10, 11, 13};
  for (int trial = 0; trial < 20; ++trial) {
    ReductionInstance inst;
    const long r = radicands[rng() % 8];
    inst.gamma = sqrt(Interval(r, kP)) * static_cast<long>(1 + rng() % 3) / static_cast<long>(1 + rng() % 4);
    inst.mu = trial % 2 == 0 ? Interval(mpq_class(static_cast<long>(1 + rng() % 97), 97), kP)
                             : log(Interval(static_cast<long>(3 + rng() % 20), kP));
    inst.A = Interval(static_cast<long>(1 + rng() % 10), kP);
    inst.B = trial % 3 == 0 ? Interval(mpq_class(3, 2), kP) : Interval(static_cast<long>(2 + rng() % 2), kP);
    inst.M = static_cast<long>(10 + rng() % 991);
    inst.two_sided = trial % 2 == 1;
    const ReductionOutcome out = dujella_petho(inst);
    const std::string tag = "trial " + std::to_string(trial);
    t.check(out.q > inst.M * 6, tag + " q > 6M");
    const long w = integer_below(out.w_bound) + 1;
    const Interval threshold = inst.A * pow(Interval(1L, kP) / inst.B, w);
    for (long u = 1; u <= inst.M.get_si(); ++u) {
      const Interval x = inst.gamma * u + inst.mu;
      mpz_class v;
      mpfr_get_z(v.get_mpz_t(), x.lower(), MPFR_RNDN);
      for (long dv = -1; dv <= 1; ++dv) {
        const mpz_class vv = v + dv;
        if (vv < 1) continue;
        const Interval value = x - vv;
        if (value.contains_zero()) continue;
        if (!inst.two_sided && value.certainly_negative()) continue;
        const Interval size = inst.two_sided ? abs(value) : value;
        t.check(threshold.certainly_less_equal(size), tag + " u=" + std::to_string(u));
      }
    }
  }
}

const std::vector<Property>& properties() {
  static const std::vector<Property> list = {
      {"cooper_howard_vs_recurrence", 2, 12, cooper_howard_property},
      {"segment_closed_form", 3, 50, segment_property},
      {"terms_below_power_of_two", 2, 20, terms_below_power_property},
      {"binet_error_below_half", 2, 10, binet_property},
      {"root_bracket_and_conjugates", 2, 60, root_property},
      {"delta_eta_bounds", 2, 60, delta_eta_property},
      {"height_f_k_below_3_log_k", 2, 15, height_property},
      {"log_square_helper", 0, 0, log_square_property},
      {"reduction_soundness", 0, 0, reduction_soundness_property},
  };
  return list;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& p : properties()) out.emplace_back(p.name);
  return out;
}

std::vector<PropertyResult> run_property_suite(int k_min, int k_max, int jobs) {
  const auto& list = properties();
  std::vector<PropertyResult> results(list.size());
  parallel_for(list.size(), jobs, [&](std::size_t i) {
    const Property& p = list[i];
    PropertyResult& r = results[i];
    r.name = p.name;
    // k-free properties carry the range 0..0 and always run
    const bool k_free = p.k_lo == 0 && p.k_hi == 0;
    r.k_lo = k_free ? 0 : std::max(p.k_lo, k_min);
    r.k_hi = k_free ? 0 : std::min(p.k_hi, k_max);
    if (r.skipped()) {
      r.passed = true;
      return;
    }
    Tally t;
    try {
      p.body(r.k_lo, r.k_hi, t);
    } catch (const std::exception& e) {
      if (t.failure.empty()) t.failure = std::string("exception: ") + e.what();
      ++t.checked;
    }
    r.checked = t.checked;
    r.passed = t.failure.empty();
    r.detail = t.failure;
  });
  return results;
}

}  // namespace kfsum::pipeline
