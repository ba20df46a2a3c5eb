// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

namespace kfsum::pipeline {

struct PropertyResult {
  std::string name;
  int k_lo = 0;  // k range actually exercised; k_lo > k_hi when skipped
  int k_hi = -1;
  long checked = 0;
  bool passed = false;
  std::string detail;  // first failure, or empty

  bool skipped() const { return k_lo > k_hi; }
};

/// Identity and property suite. Each property has its own default k range,
/// intersected with [k_min, k_max]; a property whose range becomes empty is
/// reported as skipped (and passing). Output order is fixed.
std::vector<PropertyResult> run_property_suite(int k_min, int k_max, int jobs);

/// Names in report order.
std::vector<std::string> property_names();

}  // namespace kfsum::pipeline
