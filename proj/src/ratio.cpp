// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include "orbit/ratio.hpp"

#include <cctype>

#include "orbit/errors.hpp"

namespace orbit {

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw PreconditionError("ratio denominator must be nonzero");
  }
  // The rational backend rejects negative denominators outright.
  BigInt n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Ratio(n, d);
}

std::string to_fraction(const Ratio& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Ratio parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_text(text)) {
      throw ParseError("ratio", "expected \"p/q\" or an integer, got \"" + text + "\"");
    }
    return Ratio(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw ParseError("ratio", "expected \"p/q\" with integer parts, got \"" + text + "\"");
  }
  BigInt n(num);
  BigInt d(den);
  if (d == 0) {
    throw ParseError("ratio", "zero denominator in \"" + text + "\"");
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Ratio(n, d);
}

std::string to_decimal6(const Ratio& r) {
  const bool negative = r < 0;
  const BigInt p = negative ? BigInt(-numerator(r)) : numerator(r);
  const BigInt q = denominator(r);
  BigInt scaled = p * 1000000;
  BigInt quot = scaled / q;
  BigInt rem = scaled % q;
  // Ties round to the even quotient.
  const BigInt twice = rem * 2;
  if (twice > q || (twice == q && (quot % 2) != 0)) {
    ++quot;
  }
  BigInt whole = quot / 1000000;
  BigInt frac = quot % 1000000;
  std::string frac_text = frac.str();
  frac_text.insert(0, 6 - frac_text.size(), '0');
  std::string out;
  if (negative && (whole != 0 || frac != 0)) out += '-';
  out += whole.str();
  out += '.';
  out += frac_text;
  return out;
}

}  // namespace orbit
