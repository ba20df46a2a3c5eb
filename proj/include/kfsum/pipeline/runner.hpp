// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "kfsum/pipeline/config.hpp"
#include "kfsum/pipeline/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kfsum::pipeline {

struct RunResult {
  Json report;
  std::vector<std::string> failures;
  int exit_code = 0;  // 0 verified, 1 failed check or unexpected solution
};

/// Runs the selected campaigns in the order bounds, reductions, searches,
/// properties. Progress goes to `log`. Throws ConfigError for invalid
/// configuration, unusable cache directories and corrupted checkpoints.
RunResult run(const CampaignConfig& config, std::ostream& log);

/// Writes the report to config.out (or stdout) in the configured format.
void emit(const RunResult& result, const CampaignConfig& config);

}  // namespace kfsum::pipeline
