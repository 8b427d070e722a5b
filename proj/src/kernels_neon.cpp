// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include <cstddef>
#include <cstdint>

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace orbit::kernels::detail {

#if defined(__ARM_NEON) || defined(__aarch64__)

std::uint64_t count_eq_u8_neon(const std::uint8_t* data, std::size_t n,
                               std::uint8_t value) {
  const uint8x16_t needle = vdupq_n_u8(value);
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t eq = vceqq_u8(vld1q_u8(data + i), needle);
    total += vaddlvq_u8(vshrq_n_u8(eq, 7));
  }
  for (; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

std::uint64_t count_eq_u16_neon(const std::uint16_t* data, std::size_t n,
                                std::uint16_t value) {
  const uint16x8_t needle = vdupq_n_u16(value);
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const uint16x8_t eq = vceqq_u16(vld1q_u16(data + i), needle);
    total += vaddlvq_u16(vshrq_n_u16(eq, 15));
  }
  for (; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

#endif  // defined(__ARM_NEON) || defined(__aarch64__)

}  // namespace orbit::kernels::detail
