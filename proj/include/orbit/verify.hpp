// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbit {

// One line of a scripted construction check: label, verdict, and the
// numbers behind it.
struct CheckLine {
  std::string label;
  bool pass = false;
  std::string evidence;
};

// Scripted end-to-end checks of the three built-in constructions.
// Ids: "blocks" (indicator point along the interleaved sequences),
// "decades" (the thick triple), "alternating" (the factorial ladder point).
std::vector<CheckLine> verify_example(const std::string& id,
                                      std::int64_t threads = 1);

bool all_passed(const std::vector<CheckLine>& lines);

}  // namespace orbit
