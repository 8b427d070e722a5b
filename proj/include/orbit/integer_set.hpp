// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbit/ratio.hpp"

namespace orbit {

// Closed-form integer expression in one index variable n. Evaluation is
// arbitrary precision so families like 10^n never overflow.
class IndexExpr {
public:
  BigInt eval(std::int64_t n) const;
  std::string text() const;

  static IndexExpr constant(BigInt value);
  static IndexExpr variable();
  // base^n with integer base >= 2.
  static IndexExpr power(BigInt base);

  friend IndexExpr operator+(const IndexExpr& a, const IndexExpr& b);
  friend IndexExpr operator-(const IndexExpr& a, const IndexExpr& b);
  friend IndexExpr operator*(const IndexExpr& a, const IndexExpr& b);

  struct Node;
  explicit IndexExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const std::shared_ptr<const Node>& node() const { return node_; }

private:
  std::shared_ptr<const Node> node_;
};

// Subset of the integers given by an expression tree. Membership is decidable
// per point; dense scans evaluate whole ranges at once into byte masks.
// Values are immutable and cheap to copy.
class IntegerSet {
public:
  IntegerSet() = default;

  bool contains(std::int64_t i) const;
  // out[i - lo] = 1 iff i is a member, for lo <= i <= hi.
  void fill_mask(std::int64_t lo, std::int64_t hi, std::uint8_t* out) const;
  std::string describe() const;
  bool valid() const { return node_ != nullptr; }

  static IntegerSet finite(std::vector<std::int64_t> elements);
  // { i : i == residue (mod modulus) }, modulus >= 1.
  static IntegerSet progression(std::int64_t modulus, std::int64_t residue);
  // Blocks [start(n), end(n)] for n >= first_index. Requires
  // start(n) <= end(n) and end(n) < start(n+1); checked on a leading window
  // of indices at construction.
  static IntegerSet interval_family(IndexExpr start, IndexExpr end,
                                    std::int64_t first_index);
  static IntegerSet union_of(std::vector<IntegerSet> parts);
  static IntegerSet intersection_of(std::vector<IntegerSet> parts);
  IntegerSet complemented() const;
  // { s + g : s in S }
  IntegerSet translated(std::int64_t g) const;
  // { -s : s in S }
  IntegerSet negated() const;
  // Membership by callback; used for visit sets whose elements come from a
  // point, not from a formula. Not part of the document grammar.
  static IntegerSet predicate(std::function<bool(std::int64_t)> member,
                              std::string label);

  struct Node;
  const std::shared_ptr<const Node>& node() const { return node_; }

private:
  explicit IntegerSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// S together with its mirror image, S u (-S).
IntegerSet symmetrized(const IntegerSet& s);

// Largest difference between consecutive members inside [lo, hi];
// nullopt when fewer than two members.
std::optional<std::int64_t> max_gap(const IntegerSet& s, std::int64_t lo,
                                    std::int64_t hi);

// Length of the longest block of consecutive members inside [lo, hi];
// 0 when empty.
std::int64_t max_run(const IntegerSet& s, std::int64_t lo, std::int64_t hi);

// Leftmost window of `length` consecutive integers inside [lo, hi] on which
/// every stretch of `bound` points meets the set. Equivalently: member gaps
// within the window, counting both window edges as virtual members, are all
// at most `bound`.
struct PwWindow {
  std::int64_t start = 0;
  std::int64_t length = 0;
};
std::optional<PwWindow> pw_syndetic_witness(const IntegerSet& s,
                                            std::int64_t bound,
                                            std::int64_t length,
                                            std::int64_t lo, std::int64_t hi);

// Largest spacing between starts of length-`run_length` runs inside [lo, hi].
// A start is any p with p..p+run_length-1 all members and inside the range.
// nullopt when fewer than two starts.
std::optional<std::int64_t> thickly_syndetic_gaps(const IntegerSet& s,
                                                  std::int64_t run_length,
                                                  std::int64_t lo,
                                                  std::int64_t hi);

// Decade construction: three syndetic and thick sets with empty triple
// intersection. Block families sit at 10^n; the residue tails keep every
// gap at ten or less.
struct ThickTriple {
  IntegerSet a;
  IntegerSet b;
  IntegerSet c;
};
ThickTriple thick_triple();

// Symmetric support built from blocks [n(n+1), n(n+1)+n] and their mirrors.
// The gaps between consecutive blocks are the complementary blocks
// [(n+1)^2, (n+1)^2+n].
IntegerSet block_support();

}  // namespace orbit
