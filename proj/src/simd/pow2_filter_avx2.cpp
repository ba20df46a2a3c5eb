// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/simd/pow2_filter.hpp"

#include <immintrin.h>

namespace kfsum::simd::detail {

std::size_t pow2_candidates_avx2(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out) {
  const std::size_t before = out.size();
  const __m256i vx = _mm256_set1_epi64x(static_cast<long long>(x));
  const __m256i ones = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lows + j));
    const __m256i s = _mm256_add_epi64(vx, y);
    const __m256i t = _mm256_and_si256(s, _mm256_sub_epi64(s, ones));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(t, zero)));
    while (mask != 0) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      out.push_back(static_cast<std::uint32_t>(j + static_cast<std::size_t>(lane)));
      mask &= mask - 1;
    }
  }
  for (; j < count; ++j) {
    if (passes(x + lows[j])) out.push_back(static_cast<std::uint32_t>(j));
  }
  return out.size() - before;
}

}  // namespace kfsum::simd::detail
