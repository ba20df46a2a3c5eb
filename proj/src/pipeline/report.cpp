// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/report.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>

namespace kfsum::pipeline {

namespace {

std::string sci(mpfr_srcptr v, int digits, const char* rounding) {
  char* buf = nullptr;
  const std::string format = std::string("%.*R") + rounding + "e";
  if (mpfr_asprintf(&buf, format.c_str(), digits - 1, v) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Json outcome_json(const ReductionOutcome& o, long digits) {
  Json j;
  j["w_bound"] = o.w_bound.upper_fixed(6);
  j["q"] = o.q.get_str();
  j["convergent_index"] = o.convergent_index;
  j["attempts"] = o.attempts;
  j["epsilon_lower"] = sci_lower(o.epsilon);
  j["digits"] = digits;
  return j;
}

std::string csv_field(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string sci_upper(const Interval& x, int digits) { return sci(x.upper(), digits, "U"); }
std::string sci_lower(const Interval& x, int digits) { return sci(x.lower(), digits, "D"); }

Json bound_row(const BoundReport& r) {
  Json j;
  j["k"] = r.k;
  j["C1"] = sci_upper(r.C1);
  j["C2"] = sci_upper(r.C2);
  j["stage1_coefficient"] = sci_upper(r.stage1_coefficient);
  j["stage1_published"] = sci_lower(r.stage1_published);
  j["stage2_inner"] = sci_upper(r.stage2_inner);
  j["stage2_coefficient"] = sci_upper(r.stage2_coefficient);
  j["stage2_published"] = sci_lower(r.stage2_published);
  j["n_bound"] = sci_upper(r.n_bound);
  j["M_k"] = r.M_k.get_str();
  j["holds"] = true;
  return j;
}

Json threshold_row(const ThresholdCheck& t) {
  Json j;
  j["k"] = t.k;
  j["exponent"] = "k/" + std::to_string(t.divisor);
  j["M_k_below_power"] = t.holds;
  j["gap_decreasing"] = t.ratio_decreasing;
  return j;
}

Json stage1_json(const StageOneBound& s) {
  Json j = outcome_json(s.outcome, s.digits);
  j["nm_max"] = s.nm_max;
  return j;
}

Json stage2_json(const StageTwoGrid& g) {
  Json j;
  j["points"] = g.points.size();
  long max_digits = 0;
  int max_attempts = 0;
  for (const auto& p : g.points) {
    max_digits = std::max(max_digits, p.digits);
    max_attempts = std::max(max_attempts, p.outcome.attempts);
  }
  if (!g.points.empty()) {
    const StageTwoPoint& w = g.points[g.worst];
    j["worst_nm"] = w.nm;
    j["w_bound"] = w.outcome.w_bound.upper_fixed(6);
    j["q"] = w.outcome.q.get_str();
    j["epsilon_lower"] = sci_lower(w.outcome.epsilon);
  }
  j["max_attempts"] = max_attempts;
  j["max_digits"] = max_digits;
  j["n_max"] = g.n_max;
  return j;
}

Json record_json(const SolutionRecord& r) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["a"] = r.a;
  j["family"] = r.family_name();
  j["a_relation"] = r.a_relation_name();
  return j;
}

SolutionRecord record_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  SolutionRecord r = classify(k, j.at("n").get<long>(), j.at("m").get<long>(), j.at("a").get<long>());
  if (r.family_name() != j.at("family").get<std::string>()) {
    throw std::invalid_argument("record family does not match its indices");
  }
  return r;
}

Json property_json(const PropertyResult& p) {
  Json j;
  j["name"] = p.name;
  if (p.skipped()) {
    j["status"] = "skipped";
  } else {
    j["status"] = p.passed ? "pass" : "fail";
    if (p.k_lo != 0 || p.k_hi != 0) j["k_range"] = {p.k_lo, p.k_hi};
    j["checked"] = p.checked;
    if (!p.passed) j["first_failure"] = p.detail;
  }
  return j;
}

void write_json(const Json& report, std::ostream& out) { out << report.dump(1) << '\n'; }

void write_csv(const Json& report, std::ostream& out) {
  out << "record,k,kind,value,n,m,a,family,a_relation\n";
  auto row = [&](const std::string& record, const Json& k, const std::string& kind, const Json& value) {
    out << record << ',' << csv_field(k) << ',' << kind << ',' << csv_field(value) << ",,,,,\n";
  };
  if (report.contains("bounds")) {
    for (const auto& r : report["bounds"]["rows"]) {
      if (r.contains("error")) {
        row("bound", r["k"], "error", r["error"]);
        continue;
      }
      for (const char* kind : {"C1", "C2", "stage1_coefficient", "stage2_coefficient", "n_bound", "M_k"}) {
        row("bound", r["k"], kind, r[kind]);
      }
    }
  }
  if (report.contains("reductions")) {
    for (const auto& r : report["reductions"]["rows"]) {
      if (r.contains("error")) {
        row("reduction", r["k"], "error", r["error"]);
        continue;
      }
      row("reduction", r["k"], "stage1_w_bound", r["stage1"]["w_bound"]);
      row("reduction", r["k"], "nm_max", r["stage1"]["nm_max"]);
      if (r.contains("stage2")) {
        row("reduction", r["k"], "stage2_w_bound", r["stage2"]["w_bound"]);
        row("reduction", r["k"], "n_max", r["stage2"]["n_max"]);
      }
    }
  }
  if (report.contains("solutions")) {
    for (const auto& s : report["solutions"]["records"]) {
      out << "solution," << s["k"].get<int>() << ",,," << s["n"].get<long>() << ',' << s["m"].get<long>() << ','
          << s["a"].get<long>() << ',' << s["family"].get<std::string>() << ','
          << s["a_relation"].get<std::string>() << '\n';
    }
  }
  if (report.contains("properties")) {
    for (const auto& p : report["properties"]["results"]) row("property", nullptr, p["name"], p["status"]);
  }
  row("verdict", nullptr, "verdict", report.value("verdict", ""));
}

}  // namespace kfsum::pipeline
