// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/simd/pow2_filter.hpp"

#include <arm_neon.h>

namespace kfsum::simd::detail {

std::size_t pow2_candidates_neon(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out) {
  const std::size_t before = out.size();
  const uint64x2_t vx = vdupq_n_u64(x);
  const uint64x2_t ones = vdupq_n_u64(1);
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const uint64x2_t s = vaddq_u64(vx, vld1q_u64(lows + j));
    const uint64x2_t hit = vceqzq_u64(vandq_u64(s, vsubq_u64(s, ones)));
    if (vgetq_lane_u64(hit, 0) != 0) out.push_back(static_cast<std::uint32_t>(j));
    if (vgetq_lane_u64(hit, 1) != 0) out.push_back(static_cast<std::uint32_t>(j + 1));
  }
  for (; j < count; ++j) {
    if (passes(x + lows[j])) out.push_back(static_cast<std::uint32_t>(j));
  }
  return out.size() - before;
}

}  // namespace kfsum::simd::detail
