// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/ratio.hpp"
#include "orbit/shift_space.hpp"

namespace orbit {

// Exact window ratios along a sequence plus tail-envelope estimates. The
// headline pair estimates limsup/liminf from the closing window of indices;
// the envelope grid shows how the estimate stabilizes as the window shrinks.
struct DensityReport {
  std::vector<std::pair<std::int64_t, Ratio>> ratios;  // (n, |A n F_n|/|F_n|)
  Ratio headline_upper;
  Ratio headline_lower;
  std::int64_t window_lo = 0;  // headline window [window_lo, horizon]
  std::int64_t horizon = 0;

  struct EnvelopeRow {
    std::int64_t m = 0;
    Ratio upper;  // max ratio on [m, horizon]
    Ratio lower;  // min ratio on [m, horizon]
  };
  std::vector<EnvelopeRow> envelope;

  std::string folner_label;
  std::string set_description;
};

// |A n F_n| / |F_n| as an exact rational.
Ratio count_ratio(const IntegerSet& a, const FolnerSequence& f,
                  std::int64_t n);

// Ratios for n = 0..horizon; headline window starts at
// ceil((1 - headline_fraction) * horizon). headline_fraction in (0, 1].
DensityReport density_report(const IntegerSet& a, const FolnerSequence& f,
                             std::int64_t horizon,
                             const Ratio& headline_fraction,
                             std::int64_t threads = 1);

// Indices n <= horizon whose ratio is within epsilon of the limsup
// estimate, the ratio maximum over the default headline window
// [ceil(horizon/2), horizon]. epsilon = 0 picks the indices achieving that
// estimate; the argmax window index always qualifies.
std::vector<std::int64_t> achieving_subsequence(const IntegerSet& a,
                                                const FolnerSequence& f,
                                                std::int64_t horizon,
                                                const Ratio& epsilon);

/// {g : the orbit of x visits c at time g}, predicate backed.
IntegerSet visit_set(const SymbolicPoint& x, const Cylinder& c);

// Density report of the union of the cylinders' visit sets; the headline
// pair estimates the sojourn probability of the region.
DensityReport sojourn(const SymbolicPoint& x,
                      const std::vector<Cylinder>& region,
                      const FolnerSequence& f, std::int64_t horizon,
                      const Ratio& headline_fraction,
                      std::int64_t threads = 1);

}  // namespace orbit
