// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orbit/ratio.hpp"

namespace orbit {

// Indexed family n -> finite window of the integers. Every sequence the
// artifact instantiates is interval valued, which keeps window scans on the
// counting kernels; the generator must be pure and total on n >= 0.
class FolnerSequence {
public:
  struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
  };

  FolnerSequence(std::function<Interval(std::int64_t)> generator,
                 std::string label);

  Interval interval(std::int64_t n) const;
  std::int64_t size(std::int64_t n) const;
  std::vector<std::int64_t> elements(std::int64_t n) const;
  const std::string& label() const { return label_; }

  // Centered windows [-n, n].
  static FolnerSequence standard();
  // Interleaved one-sided blocks [k(k+1), k(k+1)+k] at even indices and
  // their mirror images at odd indices. Sizes grow like n/2, so the windows
  // run away from the origin while staying asymptotically invariant.
  static FolnerSequence block_form();
  // Same interleaving built on the complementary blocks
  // [(k+1)^2, (k+1)^2+k], which sit exactly in the gaps of block_form.
  static FolnerSequence gap_form();

  FolnerSequence translated(std::int64_t g) const;

private:
  std::function<Interval(std::int64_t)> generator_;
  std::string label_;
};

// |(h + F_n) symmetric-difference F_n| / |F_n|, exactly. Decay to zero in n
// for each fixed h is the defining property being probed.
Ratio defect(const FolnerSequence& f, std::int64_t h, std::int64_t n);

// [|F_0|, ..., |F_N|]
std::vector<std::int64_t> sizes(const FolnerSequence& f, std::int64_t n_max);

std::vector<Ratio> defect_profile(const FolnerSequence& f, std::int64_t h,
                                  const std::vector<std::int64_t>& indices);

}  // namespace orbit
