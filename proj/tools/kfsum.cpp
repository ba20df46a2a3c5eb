// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/errors.hpp"
#include "kfsum/interval.hpp"
#include "kfsum/pipeline/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace kfsum;
using namespace kfsum::pipeline;

namespace {

struct Options {
  int k_min = 2;
  int k_max = kLargeKMax;
  long precision = 0;
  long cap = 4096;
  int jobs = 1;
  std::string cache_dir;
  std::string out;
  std::string format = "json";
  bool fresh = false;
  bool timing = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--k-min", o.k_min, "smallest k")->capture_default_str();
  cmd->add_option("--k-max", o.k_max, "largest k")->capture_default_str();
  cmd->add_option("--precision", o.precision, "starting precision in decimal digits (default: per k)");
  cmd->add_option("--precision-cap", o.cap, "largest precision tried before giving up")->capture_default_str();
  cmd->add_option("-j,--jobs", o.jobs, "worker threads")->capture_default_str();
  cmd->add_option("--cache-dir", o.cache_dir, "directory for digit cache and checkpoints");
  cmd->add_option("-o,--out", o.out, "report file (default: stdout)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_flag("--fresh", o.fresh, "ignore existing checkpoints");
  cmd->add_flag("--timing", o.timing, "include wall-clock times in the report");
  cmd->add_flag("-q,--quiet", o.quiet, "no progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification pipeline for F_n + F_m = 2^a over k-generalized Fibonacci numbers"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> selected;

  auto* bounds = app.add_subcommand("bounds", "linear-form bound chain and M_k for each k");
  auto* reduce = app.add_subcommand("reduce", "continued-fraction reductions");
  std::string stage = "all";
  reduce->add_option("--stage", stage, "1, 2, aneq or all")
      ->check(CLI::IsMember({"1", "2", "aneq", "all"}))
      ->capture_default_str();
  auto* search = app.add_subcommand("search", "exhaustive searches in the reduced boxes");
  std::string kind = "all";
  search->add_option("--kind", kind, "lt (a < n-2), eq (a = n-2) or all")
      ->check(CLI::IsMember({"lt", "eq", "all"}))
      ->capture_default_str();
  auto* props = app.add_subcommand("properties", "identity and property suite");
  auto* all = app.add_subcommand("all", "every campaign");
  auto* run_cmd = app.add_subcommand("run", "named campaign");
  std::string campaign;
  run_cmd->add_option("--campaign", campaign,
                      "bounds, reduce-stage1, reduce-stage2, reduce-aneq, search-lt, search-eq, properties or all")
      ->required();
  for (auto* cmd : {bounds, reduce, search, props, all, run_cmd}) add_common(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CampaignConfig cfg;
    if (bounds->parsed()) {
      cfg.campaigns = {Campaign::bounds};
    } else if (reduce->parsed()) {
      if (stage == "1" || stage == "all") cfg.campaigns.insert(Campaign::reduce_stage1);
      if (stage == "2" || stage == "all") cfg.campaigns.insert(Campaign::reduce_stage2);
      if (stage == "aneq" || stage == "all") cfg.campaigns.insert(Campaign::reduce_aneq);
    } else if (search->parsed()) {
      if (kind != "eq") cfg.campaigns.insert(Campaign::search_lt);
      if (kind != "lt") cfg.campaigns.insert(Campaign::search_eq);
    } else if (props->parsed()) {
      cfg.campaigns = {Campaign::properties};
    } else if (all->parsed()) {
      for (Campaign c : all_campaigns()) cfg.campaigns.insert(c);
    } else {
      for (Campaign c : parse_campaigns(campaign)) cfg.campaigns.insert(c);
    }
    cfg.k_min = o.k_min;
    cfg.k_max = o.k_max;
    cfg.start_digits = o.precision;
    cfg.cap_digits = o.cap;
    cfg.jobs = o.jobs;
    if (!o.cache_dir.empty()) cfg.cache_dir = o.cache_dir;
    if (!o.out.empty()) cfg.out = o.out;
    cfg.format = o.format == "csv" ? Format::csv : Format::json;
    cfg.fresh = o.fresh;
    cfg.timing = o.timing;
    cfg.quiet = o.quiet;

    const RunResult result = run(cfg, std::cerr);
    emit(result, cfg);
    for (const auto& f : result.failures) std::cerr << "FAILED: " << f << "\n";
    if (!cfg.quiet) std::cerr << "verdict: " << (result.exit_code == 0 ? "verified" : "failed") << "\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
