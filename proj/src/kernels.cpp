// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include "orbit/kernels.hpp"

#include "orbit/errors.hpp"

namespace orbit::kernels {

namespace detail {

std::uint64_t count_eq_u8_scalar(const std::uint8_t* data, std::size_t n,
                                 std::uint8_t value) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

std::uint64_t count_eq_u16_scalar(const std::uint16_t* data, std::size_t n,
                                  std::uint16_t value) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += (data[i] == value);
  }
  return total;
}

#if ORBIT_WITH_AVX2
std::uint64_t count_eq_u8_avx2(const std::uint8_t* data, std::size_t n,
                               std::uint8_t value);
std::uint64_t count_eq_u16_avx2(const std::uint16_t* data, std::size_t n,
                                std::uint16_t value);
#endif
#if ORBIT_WITH_NEON
std::uint64_t count_eq_u8_neon(const std::uint8_t* data, std::size_t n,
                               std::uint8_t value);
std::uint64_t count_eq_u16_neon(const std::uint16_t* data, std::size_t n,
                                std::uint16_t value);
#endif

}  // namespace detail

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_compiled(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if ORBIT_WITH_AVX2
      return true;
#else
      return false;
#endif
    case Backend::neon:
#if ORBIT_WITH_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

bool backend_usable(Backend b) {
  if (!backend_compiled(b)) return false;
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if ORBIT_WITH_AVX2 && defined(__x86_64__)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
      // NEON is baseline on the aarch64 targets this builds for.
      return backend_compiled(Backend::neon);
  }
  return false;
}

Backend active_backend() {
  static const Backend picked = [] {
    if (backend_usable(Backend::avx2)) return Backend::avx2;
    if (backend_usable(Backend::neon)) return Backend::neon;
    return Backend::scalar;
  }();
  return picked;
}

std::uint64_t count_eq_with(Backend b, const std::uint8_t* data, std::size_t n,
                            std::uint8_t value) {
  switch (b) {
    case Backend::scalar:
      return detail::count_eq_u8_scalar(data, n, value);
    case Backend::avx2:
#if ORBIT_WITH_AVX2
      if (backend_usable(Backend::avx2)) {
        return detail::count_eq_u8_avx2(data, n, value);
      }
#endif
      break;
    case Backend::neon:
#if ORBIT_WITH_NEON
      return detail::count_eq_u8_neon(data, n, value);
#else
      break;
#endif
  }
  throw PreconditionError("counting backend not usable on this machine");
}

std::uint64_t count_eq_with(Backend b, const std::uint16_t* data, std::size_t n,
                            std::uint16_t value) {
  switch (b) {
    case Backend::scalar:
      return detail::count_eq_u16_scalar(data, n, value);
    case Backend::avx2:
#if ORBIT_WITH_AVX2
      if (backend_usable(Backend::avx2)) {
        return detail::count_eq_u16_avx2(data, n, value);
      }
#endif
      break;
    case Backend::neon:
#if ORBIT_WITH_NEON
      return detail::count_eq_u16_neon(data, n, value);
#else
      break;
#endif
  }
  throw PreconditionError("counting backend not usable on this machine");
}

std::uint64_t count_eq(const std::uint8_t* data, std::size_t n, std::uint8_t value) {
  return count_eq_with(active_backend(), data, n, value);
}

std::uint64_t count_eq(const std::uint16_t* data, std::size_t n, std::uint16_t value) {
  return count_eq_with(active_backend(), data, n, value);
}

}  // namespace orbit::kernels
