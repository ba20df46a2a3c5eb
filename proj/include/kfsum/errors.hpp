// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>

namespace kfsum {

/// A certified check came out false. Never retried; reported as a failed
/// verification (exit code 1 at the command line).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or unusable input/output resources (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfsum
