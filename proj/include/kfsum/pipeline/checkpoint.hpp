// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Per-campaign resume file. One line per finished k:
//   <k> <payload> <crc32 of "<k> <payload>">
// The payload is a single-line JSON document without spaces. A torn final
// line (no newline) is dropped; any other bad line is an error.

#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

namespace kfsum::pipeline {

class Checkpoint {
 public:
  /// Reads existing entries unless `fresh`, in which case the file is truncated.
  /// Throws ConfigError on a corrupted line.
  Checkpoint(std::filesystem::path file, bool fresh);

  const std::map<int, std::string>& completed() const { return done_; }
  /// Appends and flushes one line; safe to call from worker threads.
  void append(int k, const std::string& payload);
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::map<int, std::string> done_;
  std::mutex mu_;
};

}  // namespace kfsum::pipeline
