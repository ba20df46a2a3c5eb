// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// On-disk cache of decimal digits of alpha(k). Records carry a CRC-32 line
// and are written to a temporary file and renamed into place, so a reader
// sees either a whole record or none. Loaded digits are always
// re-certified by a sign change before use.

#pragma once

#include "kfsum/algebraic.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace kfsum::pipeline {

std::uint32_t crc32_of(const std::string& text);

class DigitCache {
 public:
  explicit DigitCache(std::filesystem::path dir);

  std::filesystem::path file_for(int k, long digits) const;
  /// Digits if a record exists and its checksum matches.
  std::optional<std::string> load(int k, long digits) const;
  void store(int k, long digits, const std::string& alpha) const;

 private:
  std::filesystem::path dir_;
};

enum class CacheOutcome { hit, miss, rejected };

/// alpha(k) from the cache when present and certifiable, otherwise computed
/// and stored. Either way the context is rebuilt from the decimal digits,
/// so cached and fresh runs produce identical enclosures.
RootContext cached_root(const DigitCache* cache, int k, long digits, CacheOutcome* outcome = nullptr);

}  // namespace kfsum::pipeline
