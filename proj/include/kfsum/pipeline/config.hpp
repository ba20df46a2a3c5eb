// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kfsum::pipeline {

enum class Campaign { bounds, reduce_stage1, reduce_stage2, reduce_aneq, search_lt, search_eq, properties };

enum class Format { json, csv };

inline constexpr int kSmallKMax = 340;    // campaigns A, B and search A
inline constexpr int kLargeKMax = 690;    // campaign C and search B
inline constexpr long kSmallBox = 680;    // n - m and n bound for k <= 340
inline constexpr long kLargeBox = 1380;   // n bound for a = n - 2, k <= 690

const char* campaign_name(Campaign c);
/// Accepts the names above plus "all"; throws ConfigError otherwise.
std::vector<Campaign> parse_campaigns(const std::string& name);
std::vector<Campaign> all_campaigns();

struct CampaignConfig {
  int k_min = 2;  // campaigns other than properties start at 3
  int k_max = kLargeKMax;
  long start_digits = 0;  // 0: chosen per k from M_k
  long cap_digits = 4096;
  int jobs = 1;
  std::set<Campaign> campaigns;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> out;
  Format format = Format::json;
  bool fresh = false;
  bool timing = false;  // adds wall-clock times to the report (not byte-stable)
  bool quiet = false;

  bool has(Campaign c) const { return campaigns.count(c) != 0; }
  /// Throws ConfigError on empty ranges, k_min < 2, start digits below 64,
  /// jobs < 1 or no campaign selected.
  void validate() const;
};

}  // namespace kfsum::pipeline
