// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/config.hpp"

#include "kfsum/errors.hpp"

namespace kfsum::pipeline {

const char* campaign_name(Campaign c) {
  switch (c) {
    case Campaign::bounds:
      return "bounds";
    case Campaign::reduce_stage1:
      return "reduce-stage1";
    case Campaign::reduce_stage2:
      return "reduce-stage2";
    case Campaign::reduce_aneq:
      return "reduce-aneq";
    case Campaign::search_lt:
      return "search-lt";
    case Campaign::search_eq:
      return "search-eq";
    case Campaign::properties:
      return "properties";
  }
  return "?";
}

std::vector<Campaign> all_campaigns() {
  return {Campaign::bounds,    Campaign::reduce_stage1, Campaign::reduce_stage2, Campaign::reduce_aneq,
          Campaign::search_lt, Campaign::search_eq,     Campaign::properties};
}

std::vector<Campaign> parse_campaigns(const std::string& name) {
  if (name == "all") return all_campaigns();
  for (Campaign c : all_campaigns()) {
    if (name == campaign_name(c)) return {c};
  }
  throw ConfigError("unknown campaign '" + name + "'");
}

void CampaignConfig::validate() const {
  if (k_min < 2) throw ConfigError("--k-min must be >= 2");
  if (k_max < k_min) throw ConfigError("k range is empty");
  if (k_max > kLargeKMax) throw ConfigError("--k-max must be <= " + std::to_string(kLargeKMax));
  if (start_digits != 0 && start_digits < 64) throw ConfigError("--precision must be >= 64 digits");
  if (cap_digits < 64) throw ConfigError("precision cap must be >= 64 digits");
  if (start_digits > cap_digits) throw ConfigError("--precision exceeds the precision cap");
  if (jobs < 1) throw ConfigError("--jobs must be >= 1");
  if (campaigns.empty()) throw ConfigError("no campaign selected");
}

}  // namespace kfsum::pipeline
