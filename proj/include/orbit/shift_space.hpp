// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orbit/integer_set.hpp"
#include "orbit/ratio.hpp"

namespace orbit {

// Symbols are 0..size-1. Sizes above ten would not round-trip through the
// digit-string document format, so they are rejected up front.
struct Alphabet {
  int size = 2;

  explicit Alphabet(int size_in);
  Alphabet() = default;
  bool valid_symbol(int s) const { return s >= 0 && s < size; }
  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.size == b.size;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }
};

class Word {
public:
  Word(Alphabet alphabet, std::vector<std::uint8_t> symbols);
  static Word from_text(Alphabet alphabet, const std::string& digits);

  const Alphabet& alphabet() const { return alphabet_; }
  std::int64_t size() const { return static_cast<std::int64_t>(symbols_.size()); }
  int symbol(std::int64_t k) const { return symbols_[static_cast<std::size_t>(k)]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  std::string text() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.text() < b.text();
  }

private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> symbols_;
};

// The set of points whose coordinates position..position+|word|-1 spell word.
struct Cylinder {
  Word word;
  std::int64_t position = 0;
};

// Distance evidence at a finite resolution. Exact(2^-n) certifies a
// disagreement at radius n; UpperBound(2^-(R+1)) records agreement on all
// coordinates within radius R. Point equality is not decidable from
// evaluations, so Exact(0) never occurs.
struct MetricValue {
  enum class Kind { exact, upper_bound };
  Kind kind = Kind::upper_bound;
  std::int64_t exponent = 0;  // the value is 2^(-exponent)

  static MetricValue exact_at(std::int64_t n) { return {Kind::exact, n}; }
  static MetricValue upper(std::int64_t e) { return {Kind::upper_bound, e}; }
  bool is_exact() const { return kind == Kind::exact; }
  Ratio value() const;
  std::string text() const;
};

// Orders by value; at equal value an upper bound sorts below an exact hit
// since the true distance may be anything up to the bound.
bool metric_less(const MetricValue& a, const MetricValue& b);

// A deterministic bi-infinite symbol stream. Immutable; evaluation is pure,
// so concurrent reads are safe.
class SymbolicPoint {
public:
  class Rule;

  int eval(std::int64_t i) const;
  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& describe() const { return label_; }
  SymbolicPoint shifted(std::int64_t g) const;
  std::int64_t shift_offset() const { return offset_; }

  SymbolicPoint(Alphabet alphabet, std::shared_ptr<const Rule> rule,
                std::int64_t offset, std::string label);

private:
  Alphabet alphabet_;
  std::shared_ptr<const Rule> rule_;
  std::int64_t offset_ = 0;
  std::string label_;
};

SymbolicPoint make_periodic(const Word& word, std::int64_t phase);
SymbolicPoint make_indicator(const IntegerSet& set);

// The n-th word of the alternating block ladder: "01" followed by runs of a
// single filler symbol, each appended run multiplying the length by its level
// plus one. |word| = (n+1)!.
Word alternating_block_word(int n);

// The bi-infinite point determined by the ladder: nonnegative coordinates
// spell the limit word, and coordinate -i mirrors coordinate i-1.
SymbolicPoint alternating_block_point();

// Positive coordinates concatenate every binary word in length-lex order;
// negative coordinates are 0. Every word occurs infinitely often.
SymbolicPoint word_stream_point();

SymbolicPoint mutate_finitely(
    const SymbolicPoint& x,
    const std::vector<std::pair<std::int64_t, int>>& patches);

SymbolicPoint shift_point(const SymbolicPoint& x, std::int64_t g);

// Least disagreement radius n <= R gives Exact(2^-n); otherwise
// UpperBound(2^-(R+1)).
MetricValue metric_at_resolution(const SymbolicPoint& x,
                                 const SymbolicPoint& y, std::int64_t r);

Word window(const SymbolicPoint& x, std::int64_t m, std::int64_t len);

bool in_cylinder(const SymbolicPoint& x, const Cylinder& c);

}  // namespace orbit
