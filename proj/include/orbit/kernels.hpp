// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>

namespace orbit::kernels {

// Counting kernels behind the range scans. A scalar reference implementation
// is always present; vector variants are compiled per target and picked at
// runtime. All variants return identical counts on identical input.
enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_compiled(Backend b);
// Compiled and supported by the running CPU.
bool backend_usable(Backend b);
// Backend used by the unforced entry points.
Backend active_backend();

std::uint64_t count_eq(const std::uint8_t* data, std::size_t n, std::uint8_t value);
std::uint64_t count_eq(const std::uint16_t* data, std::size_t n, std::uint16_t value);

// Forced-backend entry points for equivalence tests.
std::uint64_t count_eq_with(Backend b, const std::uint8_t* data, std::size_t n,
                            std::uint8_t value);
std::uint64_t count_eq_with(Backend b, const std::uint16_t* data, std::size_t n,
                            std::uint16_t value);

}  // namespace orbit::kernels
