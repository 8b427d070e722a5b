// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

// Compiled with -mavx2; callers gate on the runtime CPU check.

#include <cstddef>
#include <cstdint>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace orbit::kernels::detail {

#if defined(__x86_64__)

std::uint64_t count_eq_u8_avx2(const std::uint8_t* data, std::size_t n,
                               std::uint8_t value) {
  const __m256i needle = _mm256_set1_epi8(static_cast<char>(value));
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i chunk =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const unsigned mask = static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(chunk, needle)));
    total += static_cast<unsigned>(__builtin_popcount(mask));
  }
  for (; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

std::uint64_t count_eq_u16_avx2(const std::uint16_t* data, std::size_t n,
                                std::uint16_t value) {
  const __m256i needle = _mm256_set1_epi16(static_cast<short>(value));
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i chunk =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    // Each matching lane contributes two set bytes to the movemask.
    const unsigned mask = static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi16(chunk, needle)));
    total += static_cast<unsigned>(__builtin_popcount(mask)) / 2;
  }
  for (; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

#endif  // defined(__x86_64__)

}  // namespace orbit::kernels::detail
