// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/simd/pow2_filter.hpp"

#include <stdexcept>
#include <string>

namespace kfsum::simd {

namespace {

using Kernel = std::size_t (*)(std::uint64_t, const std::uint64_t*, std::size_t, std::vector<std::uint32_t>&);

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(KFSUM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(KFSUM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kernel kernel_for(Isa isa) {
  switch (isa) {
#if defined(KFSUM_HAVE_AVX2)
    case Isa::avx2:
      return &detail::pow2_candidates_avx2;
#endif
#if defined(KFSUM_HAVE_NEON)
    case Isa::neon:
      return &detail::pow2_candidates_neon;
#endif
    default:
      return &detail::pow2_candidates_scalar;
  }
}

Kernel selected() {
  static const Kernel k = kernel_for(detect_isa());
  return k;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Isa detect_isa() {
  if (supported(Isa::avx2)) return Isa::avx2;
  if (supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (supported(isa)) out.push_back(isa);
  }
  return out;
}

std::size_t pow2_candidates(std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                            std::vector<std::uint32_t>& out) {
  return selected()(x, lows, count, out);
}

std::size_t pow2_candidates_with(Isa isa, std::uint64_t x, const std::uint64_t* lows, std::size_t count,
                                 std::vector<std::uint32_t>& out) {
  if (!supported(isa)) throw std::invalid_argument(std::string("pow2 filter: ") + isa_name(isa) + " not available");
  return kernel_for(isa)(x, lows, count, out);
}

}  // namespace kfsum::simd
