// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbit/density.hpp"
#include "orbit/folner.hpp"
#include "orbit/ratio.hpp"
#include "orbit/shift_space.hpp"

namespace orbit {

// Finite-resolution cover of the attracting set: the centered words of
// length 2k+1 whose visit sets carry tail density above the tolerance.
// Kept entries are sorted by word text. The union sojourn report tracks how
// much of the orbit the kept cylinders absorb; a faithful cover pushes its
// lower headline toward 1.
struct AttractorCover {
  std::int64_t resolution = 0;  // k; words have length 2k+1
  Ratio tolerance;
  std::int64_t horizon = 0;

  struct Entry {
    Word word;
    Ratio upper;  // tail max of the visit ratio
    Ratio lower;  // tail min
  };
  std::vector<Entry> kept;

  DensityReport union_sojourn;

  // Coordinate range the scan materialized; occurrence checks reuse it.
  std::int64_t scan_lo = 0;
  std::int64_t scan_hi = 0;

  std::string point_label;
  std::string folner_label;
};

// Tabulates every word visited inside the sequence windows up to the
// horizon, keeps those with tail upper density strictly above tol, and
// reports the union sojourn of the kept cylinders. tol in (0, 1).
AttractorCover attractor_cover(const SymbolicPoint& x,
                               const FolnerSequence& f, std::int64_t k,
                               std::int64_t horizon, const Ratio& tol,
                               const Ratio& headline_fraction,
                               std::int64_t threads = 1);

// Kept words whose every scanned visit is followed (one step right) by a
// word outside the kept set. An empty result certifies the kept set is
// closed under the empirical follower relation on the scanned segment.
std::vector<Word> follower_violations(const AttractorCover& cover,
                                      const SymbolicPoint& x);

// True iff every kept word occurs as a window of x inside the scan range.
bool cover_in_orbit(const AttractorCover& cover, const SymbolicPoint& x);

/// True iff the central window of x itself is a kept word: the finite
// resolution necessary condition for x to lie in its own attracting set.
bool s_generic_probe(const SymbolicPoint& x, const FolnerSequence& f,
                     std::int64_t k, std::int64_t horizon, const Ratio& tol,
                     const Ratio& headline_fraction,
                     std::int64_t threads = 1);

// Kept word sets identical; requires equal resolutions.
bool covers_equal_kept(const AttractorCover& a, const AttractorCover& b);

}  // namespace orbit
