// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/folner.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

#include "orbit/errors.hpp"

namespace orbit {
namespace {

// Index cap keeping the quadratic block arithmetic far from overflow.
constexpr std::int64_t k_max_index = 1'000'000'000;

void check_index(std::int64_t n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
  if (n > k_max_index) throw PreconditionError("sequence index too large");
}

}  // namespace

FolnerSequence::FolnerSequence(
    std::function<Interval(std::int64_t)> generator, std::string label)
    : generator_(std::move(generator)), label_(std::move(label)) {
  if (!generator_) throw PreconditionError("sequence needs a generator");
}

FolnerSequence::Interval FolnerSequence::interval(std::int64_t n) const {
  check_index(n);
  Interval window = generator_(n);
  if (window.lo > window.hi)
    throw PreconditionError("sequence window is empty");
  return window;
}

std::int64_t FolnerSequence::size(std::int64_t n) const {
  Interval window = interval(n);
  return window.hi - window.lo + 1;
}

std::vector<std::int64_t> FolnerSequence::elements(std::int64_t n) const {
  Interval window = interval(n);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(window.hi - window.lo + 1));
  for (std::int64_t i = window.lo; i <= window.hi; ++i) out.push_back(i);
  return out;
}

FolnerSequence FolnerSequence::standard() {
  return FolnerSequence(
      [](std::int64_t n) { return Interval{-n, n}; }, "standard");
}

FolnerSequence FolnerSequence::block_form() {
  return FolnerSequence(
      [](std::int64_t n) {
        std::int64_t k = n / 2;
        std::int64_t start = k * (k + 1);
        if (n % 2 == 0) return Interval{start, start + k};
        return Interval{-start - k, -start};
      },
      "block-form");
}

FolnerSequence FolnerSequence::gap_form() {
  return FolnerSequence(
      [](std::int64_t n) {
        std::int64_t k = n / 2;
        std::int64_t start = (k + 1) * (k + 1);
        if (n % 2 == 0) return Interval{start, start + k};
        return Interval{-start - k, -start};
      },
      "gap-form");
}

FolnerSequence FolnerSequence::translated(std::int64_t g) const {
  FolnerSequence base = *this;
  return FolnerSequence(
      [base, g](std::int64_t n) {
        FolnerSequence::Interval window = base.interval(n);
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        if (__builtin_add_overflow(window.lo, g, &lo) ||
            __builtin_add_overflow(window.hi, g, &hi))
          throw PreconditionError("translated window out of range");
        return FolnerSequence::Interval{lo, hi};
      },
      label_ + "+" + std::to_string(g));
}

Ratio defect(const FolnerSequence& f, std::int64_t h, std::int64_t n) {
  // For an interval window of length L, (h+W) and W overlap in
  // max(L - |h|, 0) points, so the symmetric difference has 2*min(|h|, L).
  std::int64_t length = f.size(n);
  if (h == std::numeric_limits<std::int64_t>::min())
    throw PreconditionError("translation out of range");
  std::int64_t shift = h < 0 ? -h : h;
  std::int64_t overlap = shift < length ? shift : length;
  return make_ratio(2 * overlap, length);
}

std::vector<std::int64_t> sizes(const FolnerSequence& f, std::int64_t n_max) {
  if (n_max < 0) throw PreconditionError("size horizon must be nonnegative");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(f.size(n));
  return out;
}

std::vector<Ratio> defect_profile(const FolnerSequence& f, std::int64_t h,
                                  const std::vector<std::int64_t>& indices) {
  std::vector<Ratio> out;
  out.reserve(indices.size());
  for (std::int64_t n : indices) out.push_back(defect(f, h, n));
  return out;
}

}  // namespace orbit
