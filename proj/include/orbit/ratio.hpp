// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbit {

// All ratios stay exact; floating point never enters the core.
using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

Ratio make_ratio(std::int64_t num, std::int64_t den);

// Canonical reduced rendering "p/q" with q > 0, e.g. "0/1", "5/9", "-3/7".
std::string to_fraction(const Ratio& r);

// Accepts "p/q" or a bare integer "p". Throws ParseError on anything else.
Ratio parse_fraction(const std::string& text);

// Decimal rendering with six places, ties rounded to even. Display only.
std::string to_decimal6(const Ratio& r);

}  // namespace orbit
