// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace orbit {

// Violated call contract: bad argument ranges, mismatched alphabets,
// oversized scan windows. CLI maps this to exit code 3.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input document. `where` names the offending field so the
// diagnostic can point at it. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

}  // namespace orbit
