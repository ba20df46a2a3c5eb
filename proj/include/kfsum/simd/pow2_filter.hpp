// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Low-word prefilter for "x + y is a power of two".
//
// If X + Y = 2^a exactly, the low 64 bits of X + Y are either 2^a (a < 64)
// or 0 (a >= 64); in both cases s & (s - 1) == 0 for s = x + y mod 2^64.
// Lanes passing the filter are candidates and must be verified exactly.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kfsum::simd {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);

/// Best variant supported by the running CPU and compiled in.
Isa detect_isa();

/// Every variant usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Appends to `out` every j in [0, count) with x + lows[j] passing the
/// filter, in increasing order. Returns the number appended.
std::size_t pow2_candidates(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                            std::vector<std::uint32_t>& out);

/// Same with an explicit variant; throws std::invalid_argument when `isa`
/// is not available here.
std::size_t pow2_candidates_with(Isa isa, std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out);

namespace detail {

std::size_t pow2_candidates_scalar(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                   std::vector<std::uint32_t>& out);
std::size_t pow2_candidates_avx2(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out);
std::size_t pow2_candidates_neon(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out);

inline bool passes(std::uint64_t s) { return (s & (s - 1)) == 0; }

}  // namespace detail

}  // namespace kfsum::simd
