// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/simd/pow2_filter.hpp"

namespace kfsum::simd::detail {

std::size_t pow2_candidates_scalar(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                   std::vector<std::uint32_t>& out) {
  const std::size_t before = out.size();
  for (std::size_t j = 0; j < count; ++j) {
    if (passes(x + lows[j])) out.push_back(static_cast<std::uint32_t>(j));
  }
  return out.size() - before;
}

}  // namespace kfsum::simd::detail
