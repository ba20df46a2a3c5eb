// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// One line per acceptance criterion. Exit status is the number of failures
// (capped at 1).

#include "kfsum/errors.hpp"
#include "kfsum/matveev.hpp"
#include "kfsum/parallel.hpp"
#include "kfsum/pipeline/properties.hpp"
#include "kfsum/reduction.hpp"
#include "kfsum/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace kfsum;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void verdict(int id, bool ok, const std::string& text, double secs) {
  char t[32];
  std::snprintf(t, sizeof t, "%.1f s", secs);
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << text << "  [" << t << "]"
            << std::endl;
  if (!ok) ++failures;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<SolutionRecord> family_c_union(int k_lo, int k_hi, long n_max) {
  std::vector<SolutionRecord> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const auto& r : family_c_enumerate(k)) {
      if (r.n <= n_max) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

// Criteria 1 and 2 share the per-k stage-one result.
void reduction_campaigns_ab() {
  const auto t0 = Clock::now();
  const int lo = 3;
  const int hi = 340;
  std::vector<KReduction> per_k(static_cast<std::size_t>(hi - lo + 1));
  std::vector<std::string> errors(per_k.size());
  parallel_for(per_k.size(), jobs(), [&](std::size_t i) {
    try {
      per_k[i] = reduce_k(lo + static_cast<int>(i));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  const double secs = seconds_since(t0);

  bool ok1 = true;
  bool ok2 = true;
  double w1 = -1;
  double w2 = -1;
  int k1 = 0;
  int k2 = 0;
  std::string first_error;
  for (std::size_t i = 0; i < per_k.size(); ++i) {
    if (!errors[i].empty()) {
      ok1 = ok2 = false;
      if (first_error.empty()) first_error = "k=" + std::to_string(lo + i) + ": " + errors[i];
      continue;
    }
    const KReduction& r = per_k[i];
    ok1 = ok1 && r.stage1.outcome.epsilon.certainly_positive();
    const double a = r.stage1.outcome.w_bound.upper_double();
    if (a > w1) w1 = a, k1 = r.k;
    for (const auto& p : r.stage2.points) {
      ok2 = ok2 && p.outcome.epsilon.certainly_positive();
      const double b = p.outcome.w_bound.upper_double();
      if (b > w2) w2 = b, k2 = r.k;
    }
    // the grid has to reach the stage-one bound
    ok2 = ok2 && static_cast<long>(r.stage2.points.size()) == r.stage1.nm_max;
  }
  ok1 = ok1 && w1 < 680;
  ok2 = ok2 && w2 < 680;
  verdict(1, ok1,
          "reduction A: k in [3,340], eps > 0, max bound on n-m = " + fixed(w1) + " (k=" + std::to_string(k1) +
              ") < 680" + (first_error.empty() ? "" : "; " + first_error),
          secs);
  verdict(2, ok2,
          "reduction B: k in [3,340], nm up to the stage-one bound, max bound on n-1 = " + fixed(w2) + " (k=" +
              std::to_string(k2) + ") < 680" + (first_error.empty() ? "" : "; " + first_error),
          0);
}

void reduction_campaign_c() {
  const auto t0 = Clock::now();
  const int lo = 3;
  const int hi = 690;
  std::vector<long> n_max(static_cast<std::size_t>(hi - lo + 1), -1);
  std::vector<std::string> errors(n_max.size());
  parallel_for(n_max.size(), jobs(), [&](std::size_t i) {
    try {
      n_max[i] = reduce_a_eq_n_minus_2(lo + static_cast<int>(i)).n_max;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  bool ok = true;
  long worst = -1;
  int arg = 0;
  std::string first_error;
  for (std::size_t i = 0; i < n_max.size(); ++i) {
    if (!errors[i].empty()) {
      ok = false;
      if (first_error.empty()) first_error = "k=" + std::to_string(lo + i) + ": " + errors[i];
      continue;
    }
    if (n_max[i] > worst) worst = n_max[i], arg = lo + static_cast<int>(i);
  }
  ok = ok && worst <= 1380;
  verdict(3, ok,
          "reduction C (a = n-2): k in [3,690], max n bound = " + std::to_string(worst) + " (k=" +
              std::to_string(arg) + ") <= 1380" + (first_error.empty() ? "" : "; " + first_error),
          seconds_since(t0));
}

void search_a() {
  const auto t0 = Clock::now();
  SearchSpec spec;
  spec.k_min = 3;
  spec.k_max = 340;
  spec.n_max = [](int) { return 680L; };
  spec.m_min = 2;
  spec.filter = AFilter::below_n_minus_2;
  spec.jobs = jobs();
  const auto hits = exhaustive_search(spec);
  verdict(4, hits.empty(),
          "search A: k in [3,340], n in [k+2,680], m in [2,n-1], a < n-2: " + std::to_string(hits.size()) +
              " solutions",
          seconds_since(t0));
}

void search_b() {
  const auto t0 = Clock::now();
  SearchSpec spec;
  spec.k_min = 3;
  spec.k_max = 690;
  spec.n_max = [](int) { return 1380L; };
  spec.m_min = 1;
  spec.filter = AFilter::equal_n_minus_2;
  spec.targeted = true;
  spec.jobs = jobs();
  const auto hits = exhaustive_search(spec);
  const auto expected = family_c_union(3, 690, 1380);
  bool shape = true;
  for (const auto& r : hits) {
    const long two_l = 1L << r.ell;
    shape = shape && r.family == Family::parametric && r.n == r.k + two_l && r.m == two_l + r.ell - 1 &&
            r.a == r.k + two_l - 2 && two_l + r.ell - 2 <= r.k && verify_equation(r.k, r.n, r.m) == r.a;
  }
  const bool ok = shape && hits == expected;
  verdict(5, ok,
          "search B: k in [3,690], n in [k+2,1380], a = n-2: " + std::to_string(hits.size()) + " solutions, " +
              std::to_string(expected.size()) + " family-C records expected" + (shape ? "" : ", bad record shape"),
          seconds_since(t0));
}

void bound_chain() {
  const auto t0 = Clock::now();
  const int lo = 3;
  const int hi = 690;
  std::vector<std::string> bad(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(bad.size(), jobs(), [&](std::size_t i) {
    const int k = lo + static_cast<int>(i);
    try {
      const BoundReport r = stage2_bound(k);
      const mpfr_prec_t p = 192;
      const Interval kk(static_cast<long>(k), p);
      const Interval lk = log(kk);
      const Interval pre = Interval::from_decimal("1.5e11", p) * sqr(kk) * (lk + 1L);
      const Interval c1 = Interval::from_decimal("8.75e11", p) * pow(kk, 4) * sqr(lk);
      const Interval c2 = Interval::from_decimal("5.12e23", p) * pow(kk, 7) * pow(lk, 3);
      const Interval mk = Interval::from_decimal("6.66e27", p) * pow(kk, 7) * pow(lk, 5);
      std::string why;
      if (!r.C1.certainly_less_equal(pre) || !r.C2.certainly_less_equal(pre)) why = "prefactor";
      if (!r.stage1_coefficient.certainly_less_equal(c1)) why = "n-m coefficient";
      if (!r.stage2_coefficient.certainly_less_equal(c2)) why = "n-1 coefficient";
      const auto floor_mk = mk.unique_floor();
      if (!floor_mk || r.M_k > *floor_mk) why = "M_k above the published floor";
      if (!r.n_bound.certainly_less_equal(Interval(mpz_class(r.M_k + 1), p))) why = "n bound above M_k";
      bad[i] = why;
    } catch (const std::exception& e) {
      bad[i] = e.what();
    }
  });
  std::string first;
  long count = 0;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (bad[i].empty()) continue;
    ++count;
    if (first.empty()) first = "k=" + std::to_string(lo + i) + ": " + bad[i];
  }
  verdict(6, count == 0,
          "bound chain: k in [3,690], C1, C2, n-m and n-1 coefficients and M_k within the published forms" +
              (count == 0 ? std::string() : "; " + std::to_string(count) + " failures, first " + first),
          seconds_since(t0));
}

void property_suite() {
  const auto t0 = Clock::now();
  const auto results = pipeline::run_property_suite(2, 690, jobs());
  const double secs = seconds_since(t0);
  bool ok = secs < 300;
  long checked = 0;
  std::string first;
  for (const auto& r : results) {
    checked += r.checked;
    if (!r.passed || r.skipped()) {
      ok = false;
      if (first.empty()) first = r.name + (r.skipped() ? " skipped" : ": " + r.detail);
    }
  }
  verdict(7, ok,
          "property suite: " + std::to_string(results.size()) + " properties, " + std::to_string(checked) +
              " checks, under 300 s" + (first.empty() ? "" : "; first failure " + first),
          secs);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void end_to_end() {
  const auto t0 = Clock::now();
  const fs::path dir = fs::temp_directory_path() / "kfsum_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const int worker_counts[] = {1, std::max(2, jobs())};
  std::vector<std::string> reports;
  std::string problem;
  for (int w : worker_counts) {
    const fs::path out = dir / ("report_j" + std::to_string(w) + ".json");
    const std::string cmd = std::string("\"") + KFSUM_CLI_PATH + "\" run --campaign all --quiet --jobs " +
                            std::to_string(w) + " --out \"" + out.string() + "\"";
    const int status = std::system(cmd.c_str());
    if (status != 0 && problem.empty()) problem = "exit status " + std::to_string(status) + " with --jobs " +
                                                 std::to_string(w);
    reports.push_back(slurp(out));
  }
  const bool identical = reports[0] == reports[1] && !reports[0].empty();
  if (!identical && problem.empty()) problem = "reports differ across worker counts";

  bool families = false;
  std::size_t count = 0;
  try {
    const auto j = nlohmann::json::parse(reports[0]);
    std::vector<SolutionRecord> got;
    for (const auto& r : j.at("solutions").at("records")) {
      SolutionRecord rec = classify(r.at("k").get<int>(), r.at("n").get<long>(), r.at("m").get<long>(),
                                    r.at("a").get<long>());
      if (rec.family_name() != r.at("family").get<std::string>()) problem = "family tag mismatch";
      got.push_back(rec);
    }
    count = got.size();
    // boxes: n >= k+2 with n <= 680 (a < n-2, k <= 340) and n <= 1380 (a = n-2, k <= 690);
    // the families have no member with n >= k+2 and a < n-2
    families = got == family_c_union(3, 690, 1380) && j.at("solutions").at("small_index").at("verified") == true &&
               j.at("verdict") == "verified";
  } catch (const std::exception& e) {
    if (problem.empty()) problem = std::string("unreadable report: ") + e.what();
  }
  if (!families && problem.empty()) problem = "solution set differs from the families";
  verdict(8, problem.empty() && identical && families,
          "end to end: run --campaign all exits 0, " + std::to_string(count) +
              " records equal the families inside the boxes, byte-identical for --jobs " +
              std::to_string(worker_counts[0]) + " and " + std::to_string(worker_counts[1]) +
              (problem.empty() ? "" : "; " + problem),
          seconds_since(t0));
}

}  // namespace

int main() {
  std::cout << "acceptance: " << jobs() << " worker(s)" << std::endl;
  reduction_campaigns_ab();
  reduction_campaign_c();
  search_a();
  search_b();
  bound_chain();
  property_suite();
  end_to_end();
  std::cout << "acceptance: " << (8 - failures) << "/8 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
