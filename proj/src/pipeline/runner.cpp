// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/runner.hpp"

#include "kfsum/errors.hpp"
#include "kfsum/parallel.hpp"
#include "kfsum/pipeline/checkpoint.hpp"
#include "kfsum/pipeline/digit_cache.hpp"
#include "kfsum/simd/pow2_filter.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

namespace kfsum::pipeline {

namespace {

constexpr const char* kVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  bool has(int k) const { return lo <= k && k <= hi; }
  Json json() const { return Json::array({lo, hi}); }
};

Range clamp(const CampaignConfig& c, int hi) { return {std::max(3, c.k_min), std::min(c.k_max, hi)}; }

class Runner {
 public:
  Runner(const CampaignConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log) {
    if (cfg_.cache_dir) cache_ = std::make_unique<DigitCache>(*cfg_.cache_dir / "digits");
  }

  RunResult run() {
    Json& r = result_.report;
    r["tool"] = "kfsum";
    r["version"] = kVersion;
    r["config"] = config_json();
    r["environment"] = environment_json();
    if (cfg_.has(Campaign::bounds)) timed("bounds", [&] { bounds(); });
    if (cfg_.has(Campaign::reduce_stage1) || cfg_.has(Campaign::reduce_stage2) || cfg_.has(Campaign::reduce_aneq)) {
      timed("reductions", [&] { reductions(); });
    }
    if (cfg_.has(Campaign::search_lt) || cfg_.has(Campaign::search_eq)) timed("searches", [&] { searches(); });
    if (cfg_.has(Campaign::properties)) timed("properties", [&] { properties(); });
    if (cfg_.timing) r["runtime_seconds"] = runtimes_;
    r["failures"] = result_.failures;
    r["verdict"] = result_.failures.empty() ? "verified" : "failed";
    result_.exit_code = result_.failures.empty() ? 0 : 1;
    return std::move(result_);
  }

 private:
  template <class F>
  void timed(const char* name, F&& body) {
    const auto t0 = Clock::now();
    progress(std::string(name) + ": start");
    body();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    runtimes_[name] = static_cast<double>(static_cast<long>(secs * 1000)) / 1000;
    progress(std::string(name) + ": done in " + std::to_string(secs) + " s");
  }

  void progress(const std::string& line) {
    if (cfg_.quiet) return;
    std::lock_guard lock(log_mutex_);
    log_ << "[kfsum] " << line << std::endl;
  }

  void fail(const std::string& what) { result_.failures.push_back(what); }

  std::unique_ptr<Checkpoint> checkpoint(const std::string& name) {
    if (!cfg_.cache_dir) return nullptr;
    return std::make_unique<Checkpoint>(*cfg_.cache_dir / "checkpoints" / (name + ".txt"), cfg_.fresh);
  }

  // One row per k, computed in parallel, merged in k order. Rows that
  // failed carry an "error" member and are not checkpointed.
  template <class F>
  std::vector<Json> per_k(const std::string& name, Range range, F&& compute) {
    if (range.empty()) return {};
    auto ckpt = checkpoint(name);
    const auto count = static_cast<std::size_t>(range.hi - range.lo + 1);
    std::vector<Json> rows(count);
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < count; ++i) {
      const int k = range.lo + static_cast<int>(i);
      if (ckpt) {
        if (auto it = ckpt->completed().find(k); it != ckpt->completed().end()) {
          try {
            rows[i] = Json::parse(it->second);
            continue;
          } catch (const Json::exception&) {
            throw ConfigError("checkpoint " + ckpt->file().string() + " has an unreadable entry for k=" +
                              std::to_string(k));
          }
        }
      }
      todo.push_back(i);
    }
    if (todo.size() < count) progress(name + ": " + std::to_string(count - todo.size()) + " k values resumed");
    std::size_t finished = 0;
    std::mutex m;
    parallel_for(todo.size(), cfg_.jobs, [&](std::size_t t) {
      const std::size_t i = todo[t];
      const int k = range.lo + static_cast<int>(i);
      Json row;
      bool ok = true;
      try {
        row = compute(k);
      } catch (const VerificationFailure& e) {
        ok = false;
        row = Json{{"k", k}, {"error", e.what()}};
      } catch (const PrecisionError& e) {
        ok = false;
        row = Json{{"k", k}, {"error", e.what()}};
      }
      if (ok && ckpt) ckpt->append(k, row.dump());
      rows[i] = std::move(row);
      std::lock_guard lock(m);
      if (++finished % 50 == 0) progress(name + ": " + std::to_string(finished) + "/" + std::to_string(todo.size()));
    });
    for (const auto& row : rows) {
      if (row.contains("error")) {
        fail(name + " k=" + std::to_string(row["k"].get<int>()) + ": " + row["error"].get<std::string>());
      }
    }
    return rows;
  }

  Json config_json() const {
    Json j;
    j["k_range"] = Json::array({cfg_.k_min, cfg_.k_max});
    Json names = Json::array();
    for (Campaign c : all_campaigns()) {
      if (cfg_.has(c)) names.push_back(campaign_name(c));
    }
    j["campaigns"] = names;
    return j;
  }

  Json environment_json() const {
    Json j;
    j["start_digits"] = cfg_.start_digits == 0 ? Json("auto") : Json(cfg_.start_digits);
    j["cap_digits"] = cfg_.cap_digits;
    j["pow2_filter"] = simd::isa_name(simd::detect_isa());
    return j;
  }

  PrecisionPolicy policy() const {
    PrecisionPolicy p;
    p.start_digits = cfg_.start_digits;
    p.cap_digits = cfg_.cap_digits;
    DigitCache* cache = cache_.get();
    p.roots = [cache](int k, long digits) { return cached_root(cache, k, digits); };
    return p;
  }

  void bounds() {
    const Range range = clamp(cfg_, kLargeKMax);
    Json section;
    section["k_range"] = range.json();
    section["rows"] = per_k("bounds", range, [](int k) { return bound_row(stage2_bound(k)); });
    Json th = Json::array();
    for (auto [k, d] : {std::pair{341, 2}, std::pair{691, 4}}) {
      const ThresholdCheck t = threshold_check(k, d);
      if (!t.holds || !t.ratio_decreasing) fail("threshold M_k < 2^(k/" + std::to_string(d) + ") fails from k=" +
                                                std::to_string(k));
      th.push_back(threshold_row(t));
    }
    section["thresholds"] = th;
    result_.report["bounds"] = std::move(section);
  }

  void reductions() {
    const Range range = clamp(cfg_, kLargeKMax);
    const bool full = cfg_.has(Campaign::reduce_stage2) || cfg_.has(Campaign::reduce_aneq);
    std::string name = full ? "reduce_full" : "reduce_stage1";
    name += "_p" + std::to_string(cfg_.start_digits) + "_c" + std::to_string(cfg_.cap_digits);
    const PrecisionPolicy pol = policy();
    std::vector<Json> rows = per_k(name, range, [&](int k) {
      Json row;
      row["k"] = k;
      if (full) {
        const KReduction red = reduce_k(k, pol);
        row["M_k"] = red.M.get_str();
        row["stage1"] = stage1_json(red.stage1);
        row["stage2"] = stage2_json(red.stage2);
      } else {
        const StageOneBound s1 = reduce_stage1(k, pol);
        row["M_k"] = s1.M.get_str();
        row["stage1"] = stage1_json(s1);
      }
      return row;
    });
    for (const auto& row : rows) {
      if (!row.contains("error")) reduced_[row["k"].get<int>()] = row;
    }

    Json campaigns;
    const Range small = clamp(cfg_, kSmallKMax);
    const Range large = clamp(cfg_, kLargeKMax);
    if (cfg_.has(Campaign::reduce_stage1) && !small.empty()) {
      campaigns["A"] = summarize(rows, small, "stage1", "w_bound", "nm_max", kSmallBox, false,
                                 "bound on n - m; eps > 0 at every k");
    }
    if (cfg_.has(Campaign::reduce_stage2) && !small.empty()) {
      campaigns["B"] = summarize(rows, small, "stage2", "w_bound", "n_max", kSmallBox, false,
                                 "bound on n - 1 over nm = 1 .. stage-one bound");
    }
    if (cfg_.has(Campaign::reduce_aneq) && !large.empty()) {
      Json c = summarize(rows, large, "stage2", "w_bound", "n_max", kLargeBox, true, "bound on n when a = n - 2");
      c["assumption"] =
          "the a = n - 2 instances reuse the general forms: gamma = log 2 / log alpha, mu from f_k(alpha) "
          "(A = 6, one-sided) and from f_k(alpha)(1 + alpha^-(n-m)) (A = 4, two-sided), B = alpha, M = M_k";
      campaigns["C"] = std::move(c);
    }
    Json section;
    section["k_range"] = range.json();
    section["campaigns"] = std::move(campaigns);
    section["rows"] = std::move(rows);
    result_.report["reductions"] = std::move(section);
  }

  // Largest achieved bound over the range. The strict campaigns compare the
  // real bound w against the limit; the inclusive one compares the integer
  // bound n_max.
  Json summarize(const std::vector<Json>& rows, Range range, const char* stage, const char* w_key,
                 const char* int_key, long limit, bool inclusive, const char* what) {
    double worst_w = -1;
    long worst_int = -1;
    int argmax = 0;
    std::string worst_text;
    bool complete = true;
    for (const auto& row : rows) {
      const int k = row["k"].get<int>();
      if (!range.has(k)) continue;
      if (row.contains("error") || !row.contains(stage)) {
        complete = false;
        continue;
      }
      const Json& s = row[stage];
      const double w = std::stod(s[w_key].get<std::string>());
      if (w > worst_w) {
        worst_w = w;
        worst_text = s[w_key].get<std::string>();
        argmax = k;
      }
      worst_int = std::max(worst_int, s[int_key].get<long>());
    }
    const bool pass = complete && (inclusive ? worst_int <= limit : worst_w < static_cast<double>(limit));
    Json j;
    j["what"] = what;
    j["k_range"] = range.json();
    j["max_w_bound"] = worst_text;
    j["argmax_k"] = argmax;
    j[std::string("max_") + int_key] = worst_int;
    j["limit"] = limit;
    j["comparison"] = inclusive ? "n_max <= limit" : "w_bound < limit";
    j["pass"] = pass;
    if (!pass) fail(std::string("reduction campaign: ") + what + " not within " + std::to_string(limit));
    return j;
  }

  std::vector<SolutionRecord> search(const std::string& name, Range range, long box, AFilter filter, bool targeted,
                                     Json& box_json) {
    auto ckpt = checkpoint(name);
    SearchSpec spec;
    spec.k_min = range.lo;
    spec.k_max = range.hi;
    spec.n_max = [box](int) { return box; };
    spec.m_min = 1;
    spec.filter = filter;
    spec.targeted = targeted;
    spec.jobs = cfg_.jobs;
    if (ckpt) {
      for (const auto& [k, payload] : ckpt->completed()) {
        std::vector<SolutionRecord> hits;
        try {
          for (const auto& h : Json::parse(payload)) hits.push_back(record_from_json(h));
        } catch (const std::exception&) {
          throw ConfigError("checkpoint " + ckpt->file().string() + " has an unreadable entry for k=" +
                            std::to_string(k));
        }
        if (range.has(k)) spec.resume[k] = std::move(hits);
      }
      spec.on_complete = [&](int k, const std::vector<SolutionRecord>& hits) {
        Json arr = Json::array();
        for (const auto& h : hits) arr.push_back(record_json(h));
        ckpt->append(k, arr.dump());
      };
    }
    std::vector<SolutionRecord> hits = exhaustive_search(spec);
    box_json["campaign"] = name;
    box_json["k_range"] = range.json();
    box_json["n_range"] = "[k+2, " + std::to_string(box) + "]";
    box_json["m_range"] = "[1, n-1]";
    box_json["a_filter"] = a_filter_name(filter);
    box_json["scan"] = targeted ? "targeted" : "pairwise";
    box_json["hits"] = hits.size();
    // the box must contain every solution the reductions allow
    Json covered = "not computed";
    bool have_all = true;
    bool inside = true;
    for (int k = range.lo; k <= range.hi; ++k) {
      auto it = reduced_.find(k);
      if (it == reduced_.end() || !it->second.contains("stage2")) {
        have_all = false;
        break;
      }
      const Json& row = it->second;
      inside = inside && row["stage2"]["n_max"].get<long>() <= box;
      if (filter != AFilter::equal_n_minus_2) inside = inside && row["stage1"]["nm_max"].get<long>() <= box;
    }
    if (have_all) {
      covered = inside;
      if (!inside) fail(name + ": reduced bounds exceed the search box");
    }
    box_json["box_covers_reduced_bounds"] = covered;
    return hits;
  }

  void searches() {
    std::vector<SolutionRecord> records;
    std::vector<SolutionRecord> expected;
    Json boxes = Json::array();
    if (cfg_.has(Campaign::search_lt)) {
      const Range range = clamp(cfg_, kSmallKMax);
      if (!range.empty()) {
        Json box;
        auto hits = search("search-lt", range, kSmallBox, AFilter::below_n_minus_2, false, box);
        records.insert(records.end(), hits.begin(), hits.end());
        boxes.push_back(std::move(box));
        // no family has n >= k + 2 and a < n - 2
      }
    }
    if (cfg_.has(Campaign::search_eq)) {
      const Range range = clamp(cfg_, kLargeKMax);
      if (!range.empty()) {
        Json box;
        auto hits = search("search-eq", range, kLargeBox, AFilter::equal_n_minus_2, true, box);
        records.insert(records.end(), hits.begin(), hits.end());
        boxes.push_back(std::move(box));
        for (int k = range.lo; k <= range.hi; ++k) {
          for (const auto& r : family_c_enumerate(k)) {
            if (r.n <= kLargeBox) expected.push_back(r);
          }
        }
      }
    }
    std::sort(records.begin(), records.end(), record_less);
    records.erase(std::unique(records.begin(), records.end()), records.end());
    std::sort(expected.begin(), expected.end(), record_less);

    Json list = Json::array();
    for (const auto& r : records) {
      list.push_back(record_json(r));
      if (r.family == Family::unexpected) fail("unexpected solution " + record_json(r).dump());
      if (r.a > r.n - 2) fail("solution with a > n - 2: " + record_json(r).dump());
      if (!verify_equation(r.k, r.n, r.m) || *verify_equation(r.k, r.n, r.m) != r.a) {
        fail("solution does not re-verify: " + record_json(r).dump());
      }
    }
    const bool match = records == expected;
    if (!match) fail("search hits differ from the solution families inside the boxes");

    // n <= k + 1: both terms are powers of two; closed form, re-verified here
    Json small;
    const Range range = clamp(cfg_, kLargeKMax);
    long small_count = 0;
    bool small_ok = true;
    for (int k = range.lo; k <= range.hi; ++k) {
      const KFibTable table = generate(k, k + 1);
      for (const auto& r : small_index_solutions(k)) {
        ++small_count;
        const auto a = verify_equation(table, r.n, r.m);
        small_ok = small_ok && a && *a == r.a && r.family != Family::unexpected;
      }
    }
    if (!small_ok) fail("closed-form solutions with n <= k + 1 do not verify");
    small["k_range"] = range.json();
    small["rule"] = "n <= k+1: (1,1,1), (2,1,1) and (t,t,t-1) for 2 <= t <= k+1";
    small["records"] = small_count;
    small["verified"] = small_ok;

    Json section;
    section["boxes"] = std::move(boxes);
    section["small_index"] = std::move(small);
    section["expected_records"] = expected.size();
    section["matches_families"] = match;
    section["records"] = std::move(list);
    result_.report["solutions"] = std::move(section);
  }

  void properties() {
    Json section;
    Json results = Json::array();
    bool all = true;
    for (const auto& p : run_property_suite(cfg_.k_min, cfg_.k_max, cfg_.jobs)) {
      results.push_back(property_json(p));
      if (!p.passed) {
        all = false;
        fail("property " + p.name + ": " + p.detail);
      }
    }
    section["all_pass"] = all;
    section["results"] = std::move(results);
    result_.report["properties"] = std::move(section);
  }

  const CampaignConfig& cfg_;
  std::ostream& log_;
  std::mutex log_mutex_;
  std::unique_ptr<DigitCache> cache_;
  std::map<int, Json> reduced_;
  Json runtimes_ = Json::object();
  RunResult result_;
};

}  // namespace

RunResult run(const CampaignConfig& config, std::ostream& log) {
  config.validate();
  return Runner(config, log).run();
}

void emit(const RunResult& result, const CampaignConfig& config) {
  auto write = [&](std::ostream& out) {
    if (config.format == Format::csv) {
      write_csv(result.report, out);
    } else {
      write_json(result.report, out);
    }
  };
  if (!config.out) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  const auto tmp = std::filesystem::path(config.out->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    write(out);
    if (!out.flush()) throw ConfigError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *config.out, ec);
  if (ec) throw ConfigError("cannot write " + config.out->string() + ": " + ec.message());
}

}  // namespace kfsum::pipeline
