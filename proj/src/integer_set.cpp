// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/integer_set.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "orbit/errors.hpp"

namespace orbit {
namespace {

constexpr std::int64_t k_i64_min = std::numeric_limits<std::int64_t>::min();

std::int64_t checked_neg(std::int64_t i) {
  if (i == k_i64_min) throw PreconditionError("integer negation out of range");
  return -i;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw PreconditionError("integer range shift out of range");
  return r;
}

}  // namespace

struct IndexExpr::Node {
  enum class Kind { constant, variable, power, add, sub, mul };
  Kind kind = Kind::constant;
  BigInt value;  // constant value, or the base for power nodes
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

BigInt eval_expr(const IndexExpr::Node& node, std::int64_t n) {
  using Kind = IndexExpr::Node::Kind;
  switch (node.kind) {
    case Kind::constant:
      return node.value;
    case Kind::variable:
      return BigInt(n);
    case Kind::power:
      if (n < 0) throw PreconditionError("power index must be nonnegative");
      return boost::multiprecision::pow(node.value,
                                        static_cast<unsigned>(n));
    case Kind::add:
      return eval_expr(*node.left, n) + eval_expr(*node.right, n);
    case Kind::sub:
      return eval_expr(*node.left, n) - eval_expr(*node.right, n);
    case Kind::mul:
      return eval_expr(*node.left, n) * eval_expr(*node.right, n);
  }
  throw PreconditionError("unreachable index expression kind");
}

std::string expr_text(const IndexExpr::Node& node) {
  using Kind = IndexExpr::Node::Kind;
  switch (node.kind) {
    case Kind::constant:
      return node.value.str();
    case Kind::variable:
      return "n";
    case Kind::power:
      return node.value.str() + "^n";
    case Kind::add:
      return "(" + expr_text(*node.left) + "+" + expr_text(*node.right) + ")";
    case Kind::sub:
      return "(" + expr_text(*node.left) + "-" + expr_text(*node.right) + ")";
    case Kind::mul:
      return "(" + expr_text(*node.left) + "*" + expr_text(*node.right) + ")";
  }
  throw PreconditionError("unreachable index expression kind");
}

}  // namespace

BigInt IndexExpr::eval(std::int64_t n) const {
  if (!node_) throw PreconditionError("empty index expression");
  return eval_expr(*node_, n);
}

std::string IndexExpr::text() const {
  if (!node_) return "<empty>";
  return expr_text(*node_);
}

IndexExpr IndexExpr::constant(BigInt value) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::constant;
  node->value = std::move(value);
  return IndexExpr(std::move(node));
}

IndexExpr IndexExpr::variable() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::variable;
  return IndexExpr(std::move(node));
}

IndexExpr IndexExpr::power(BigInt base) {
  if (base < 2) throw PreconditionError("power base must be at least 2");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::power;
  node->value = std::move(base);
  return IndexExpr(std::move(node));
}

namespace {

IndexExpr binary_expr(IndexExpr::Node::Kind kind, const IndexExpr& a,
                      const IndexExpr& b) {
  auto node = std::make_shared<IndexExpr::Node>();
  node->kind = kind;
  node->left = a.node();
  node->right = b.node();
  return IndexExpr(std::move(node));
}

}  // namespace

IndexExpr operator+(const IndexExpr& a, const IndexExpr& b) {
  return binary_expr(IndexExpr::Node::Kind::add, a, b);
}
IndexExpr operator-(const IndexExpr& a, const IndexExpr& b) {
  return binary_expr(IndexExpr::Node::Kind::sub, a, b);
}
IndexExpr operator*(const IndexExpr& a, const IndexExpr& b) {
  return binary_expr(IndexExpr::Node::Kind::mul, a, b);
}

struct IntegerSet::Node {
  enum class Kind {
    finite,
    progression,
    family,
    set_union,
    set_intersection,
    complement,
    translate,
    negate,
    predicate,
  };
  Kind kind = Kind::finite;
  std::vector<std::int64_t> elements;  // finite, sorted ascending
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
  IndexExpr start{nullptr};
  IndexExpr end{nullptr};
  std::int64_t first_index = 0;
  std::vector<IntegerSet> parts;
  std::int64_t offset = 0;
  std::function<bool(std::int64_t)> member;
  std::string label;
};

namespace {

using SetNode = IntegerSet::Node;

// Bound on doubling steps while bracketing a family index. A family whose
// starts increase strictly reaches any target in at most 64 doublings.
constexpr int k_family_probe_cap = 200;

// Largest n >= first_index with start(n) <= x, or nullopt when start at
// first_index already exceeds x.
std::optional<std::int64_t> last_start_le(const SetNode& node, const BigInt& x) {
  if (node.start.eval(node.first_index) > x) return std::nullopt;
  std::int64_t lo = node.first_index;
  std::int64_t span = 1;
  int probes = 0;
  while (node.start.eval(node.first_index + span) <= x) {
    lo = node.first_index + span;
    if (span > (std::numeric_limits<std::int64_t>::max() >> 1))
      throw PreconditionError("interval family start does not increase");
    span <<= 1;
    if (++probes > k_family_probe_cap)
      throw PreconditionError("interval family start does not increase");
  }
  std::int64_t hi = node.first_index + span;  // start(hi) > x
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (node.start.eval(mid) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Smallest n >= first_index with end(n) >= x. end() inherits strict growth
// from the block ordering, so the same bracketing applies.
std::optional<std::int64_t> first_end_ge(const SetNode& node, const BigInt& x) {
  if (node.end.eval(node.first_index) >= x) return node.first_index;
  std::int64_t lo = node.first_index;  // end(lo) < x
  std::int64_t span = 1;
  int probes = 0;
  while (node.end.eval(node.first_index + span) < x) {
    lo = node.first_index + span;
    if (span > (std::numeric_limits<std::int64_t>::max() >> 1))
      throw PreconditionError("interval family end does not increase");
    span <<= 1;
    if (++probes > k_family_probe_cap)
      throw PreconditionError("interval family end does not increase");
  }
  std::int64_t hi = node.first_index + span;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (node.end.eval(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

bool node_contains(const SetNode& node, std::int64_t i);

bool family_contains(const SetNode& node, std::int64_t i) {
  BigInt x(i);
  auto n = last_start_le(node, x);
  if (!n) return false;
  return node.end.eval(*n) >= x;
}

bool node_contains(const SetNode& node, std::int64_t i) {
  switch (node.kind) {
    case SetNode::Kind::finite:
      return std::binary_search(node.elements.begin(), node.elements.end(), i);
    case SetNode::Kind::progression: {
      std::int64_t m = node.modulus;
      std::int64_t r = ((node.residue % m) + m) % m;
      return ((i % m) + m) % m == r;
    }
    case SetNode::Kind::family:
      return family_contains(node, i);
    case SetNode::Kind::set_union:
      for (const auto& part : node.parts)
        if (part.contains(i)) return true;
      return false;
    case SetNode::Kind::set_intersection:
      for (const auto& part : node.parts)
        if (!part.contains(i)) return false;
      return true;
    case SetNode::Kind::complement:
      return !node.parts.front().contains(i);
    case SetNode::Kind::translate:
      return node.parts.front().contains(checked_sub(i, node.offset));
    case SetNode::Kind::negate:
      return node.parts.front().contains(checked_neg(i));
    case SetNode::Kind::predicate:
      return node.member(i);
  }
  throw PreconditionError("unreachable set node kind");
}

void node_fill(const SetNode& node, std::int64_t lo, std::int64_t hi,
               std::uint8_t* out);

void family_fill(const SetNode& node, std::int64_t lo, std::int64_t hi,
                 std::uint8_t* out) {
  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::fill(out, out + count, std::uint8_t{0});
  auto n_last = last_start_le(node, BigInt(hi));
  if (!n_last) return;
  auto n_first = first_end_ge(node, BigInt(lo));
  if (!n_first || *n_first > *n_last) return;
  for (std::int64_t n = *n_first; n <= *n_last; ++n) {
    BigInt bs = node.start.eval(n);
    BigInt be = node.end.eval(n);
    if (be < lo || bs > hi) continue;
    std::int64_t a = bs < lo ? lo : static_cast<std::int64_t>(bs);
    std::int64_t b = be > hi ? hi : static_cast<std::int64_t>(be);
    for (std::int64_t i = a; i <= b; ++i)
      out[static_cast<std::size_t>(i - lo)] = 1;
  }
}

void node_fill(const SetNode& node, std::int64_t lo, std::int64_t hi,
               std::uint8_t* out) {
  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  switch (node.kind) {
    case SetNode::Kind::finite: {
      std::fill(out, out + count, std::uint8_t{0});
      auto it = std::lower_bound(node.elements.begin(), node.elements.end(), lo);
      for (; it != node.elements.end() && *it <= hi; ++it)
        out[static_cast<std::size_t>(*it - lo)] = 1;
      return;
    }
    case SetNode::Kind::progression: {
      std::fill(out, out + count, std::uint8_t{0});
      std::int64_t m = node.modulus;
      std::int64_t r = ((node.residue % m) + m) % m;
      std::int64_t rem = ((lo % m) + m) % m;
      std::int64_t first = lo + ((r - rem) % m + m) % m;
      for (std::int64_t i = first; i <= hi; i += m)
        out[static_cast<std::size_t>(i - lo)] = 1;
      return;
    }
    case SetNode::Kind::family:
      family_fill(node, lo, hi, out);
      return;
    case SetNode::Kind::set_union: {
      std::fill(out, out + count, std::uint8_t{0});
      std::vector<std::uint8_t> scratch(count);
      for (const auto& part : node.parts) {
        part.fill_mask(lo, hi, scratch.data());
        for (std::size_t k = 0; k < count; ++k) out[k] |= scratch[k];
      }
      return;
    }
    case SetNode::Kind::set_intersection: {
      std::fill(out, out + count, std::uint8_t{1});
      std::vector<std::uint8_t> scratch(count);
      for (const auto& part : node.parts) {
        part.fill_mask(lo, hi, scratch.data());
        for (std::size_t k = 0; k < count; ++k) out[k] &= scratch[k];
      }
      return;
    }
    case SetNode::Kind::complement:
      node.parts.front().fill_mask(lo, hi, out);
      for (std::size_t k = 0; k < count; ++k) out[k] ^= 1;
      return;
    case SetNode::Kind::translate:
      node.parts.front().fill_mask(checked_sub(lo, node.offset),
                                   checked_sub(hi, node.offset), out);
      return;
    case SetNode::Kind::negate: {
      std::vector<std::uint8_t> scratch(count);
      node.parts.front().fill_mask(checked_neg(hi), checked_neg(lo),
                                   scratch.data());
      std::reverse_copy(scratch.begin(), scratch.end(), out);
      return;
    }
    case SetNode::Kind::predicate:
      for (std::int64_t i = lo; i <= hi; ++i)
        out[static_cast<std::size_t>(i - lo)] = node.member(i) ? 1 : 0;
      return;
  }
  throw PreconditionError("unreachable set node kind");
}

std::string node_text(const SetNode& node) {
  switch (node.kind) {
    case SetNode::Kind::finite: {
      std::ostringstream os;
      os << "{";
      for (std::size_t k = 0; k < node.elements.size(); ++k) {
        if (k) os << ",";
        os << node.elements[k];
      }
      os << "}";
      return os.str();
    }
    case SetNode::Kind::progression: {
      std::ostringstream os;
      os << node.modulus << "Z+" << ((node.residue % node.modulus) +
                                     node.modulus) % node.modulus;
      return os.str();
    }
    case SetNode::Kind::family: {
      std::ostringstream os;
      os << "blocks[n>=" << node.first_index << ": " << node.start.text()
         << " .. " << node.end.text() << "]";
      return os.str();
    }
    case SetNode::Kind::set_union: {
      std::string text = "union(";
      for (std::size_t k = 0; k < node.parts.size(); ++k) {
        if (k) text += ", ";
        text += node.parts[k].describe();
      }
      return text + ")";
    }
    case SetNode::Kind::set_intersection: {
      std::string text = "inter(";
      for (std::size_t k = 0; k < node.parts.size(); ++k) {
        if (k) text += ", ";
        text += node.parts[k].describe();
      }
      return text + ")";
    }
    case SetNode::Kind::complement:
      return "compl(" + node.parts.front().describe() + ")";
    case SetNode::Kind::translate: {
      std::ostringstream os;
      os << "shift(" << node.parts.front().describe() << ", " << node.offset
         << ")";
      return os.str();
    }
    case SetNode::Kind::negate:
      return "mirror(" + node.parts.front().describe() + ")";
    case SetNode::Kind::predicate:
      return "pred:" + node.label;
  }
  throw PreconditionError("unreachable set node kind");
}

}  // namespace

bool IntegerSet::contains(std::int64_t i) const {
  if (!node_) throw PreconditionError("empty integer set expression");
  return node_contains(*node_, i);
}

void IntegerSet::fill_mask(std::int64_t lo, std::int64_t hi,
                           std::uint8_t* out) const {
  if (!node_) throw PreconditionError("empty integer set expression");
  if (lo > hi) throw PreconditionError("mask range is empty");
  node_fill(*node_, lo, hi, out);
}

std::string IntegerSet::describe() const {
  if (!node_) return "<empty>";
  return node_text(*node_);
}

IntegerSet IntegerSet::finite(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::finite;
  node->elements = std::move(elements);
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::progression(std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) throw PreconditionError("progression modulus must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::progression;
  node->modulus = modulus;
  node->residue = residue;
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::interval_family(IndexExpr start, IndexExpr end,
                                       std::int64_t first_index) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::family;
  node->start = std::move(start);
  node->end = std::move(end);
  node->first_index = first_index;
  // Ordering probe on a leading window of indices. Deeper defects surface as
  // probe-cap errors during evaluation.
  for (std::int64_t n = first_index; n <= first_index + 64; ++n) {
    if (node->start.eval(n) > node->end.eval(n))
      throw PreconditionError("interval family block start exceeds its end");
    if (node->end.eval(n) >= node->start.eval(n + 1))
      throw PreconditionError("interval family blocks must be disjoint and ordered");
  }
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::union_of(std::vector<IntegerSet> parts) {
  if (parts.empty()) throw PreconditionError("union needs at least one part");
  for (const auto& part : parts)
    if (!part.valid()) throw PreconditionError("union over empty expression");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::set_union;
  node->parts = std::move(parts);
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::intersection_of(std::vector<IntegerSet> parts) {
  if (parts.empty())
    throw PreconditionError("intersection needs at least one part");
  for (const auto& part : parts)
    if (!part.valid())
      throw PreconditionError("intersection over empty expression");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::set_intersection;
  node->parts = std::move(parts);
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::complemented() const {
  if (!node_) throw PreconditionError("empty integer set expression");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::complement;
  node->parts = {*this};
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::translated(std::int64_t g) const {
  if (!node_) throw PreconditionError("empty integer set expression");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::translate;
  node->parts = {*this};
  node->offset = g;
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::negated() const {
  if (!node_) throw PreconditionError("empty integer set expression");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::negate;
  node->parts = {*this};
  return IntegerSet(std::move(node));
}

IntegerSet IntegerSet::predicate(std::function<bool(std::int64_t)> member,
                                 std::string label) {
  if (!member) throw PreconditionError("predicate set needs a callback");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::predicate;
  node->member = std::move(member);
  node->label = std::move(label);
  return IntegerSet(std::move(node));
}

IntegerSet symmetrized(const IntegerSet& s) {
  return IntegerSet::union_of({s, s.negated()});
}

namespace {

std::vector<std::uint8_t> range_mask(const IntegerSet& s, std::int64_t lo,
                                     std::int64_t hi) {
  if (lo > hi) throw PreconditionError("range is empty");
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(hi - lo + 1));
  s.fill_mask(lo, hi, mask.data());
  return mask;
}

}  // namespace

std::optional<std::int64_t> max_gap(const IntegerSet& s, std::int64_t lo,
                                    std::int64_t hi) {
  auto mask = range_mask(s, lo, hi);
  std::optional<std::int64_t> prev;
  std::optional<std::int64_t> best;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (!mask[k]) continue;
    std::int64_t i = lo + static_cast<std::int64_t>(k);
    if (prev) {
      std::int64_t gap = i - *prev;
      best = best ? std::max(*best, gap) : gap;
    }
    prev = i;
  }
  return best;
}

std::int64_t max_run(const IntegerSet& s, std::int64_t lo, std::int64_t hi) {
  auto mask = range_mask(s, lo, hi);
  std::int64_t best = 0;
  std::int64_t run = 0;
  for (std::uint8_t bit : mask) {
    if (bit) {
      ++run;
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

std::optional<PwWindow> pw_syndetic_witness(const IntegerSet& s,
                                            std::int64_t bound,
                                            std::int64_t length,
                                            std::int64_t lo, std::int64_t hi) {
  if (bound < 1) throw PreconditionError("gap bound must be >= 1");
  if (length < 1) throw PreconditionError("window length must be >= 1");
  if (lo > hi) throw PreconditionError("range is empty");
  std::int64_t span = hi - lo + 1;
  if (length > span) return std::nullopt;
  if (bound > length) return PwWindow{lo, length};  // no stretch fits inside
  auto mask = range_mask(s, lo, hi);
  std::size_t count = mask.size();
  // next[k]: offset of the first member at position >= k, count when none.
  std::vector<std::size_t> next(count + 1);
  next[count] = count;
  for (std::size_t k = count; k-- > 0;)
    next[k] = mask[k] ? k : next[k + 1];
  // bad[k]: the stretch of `bound` points starting at offset k misses S.
  // Windows qualify iff they contain no bad stretch start.
  std::size_t b = static_cast<std::size_t>(bound);
  std::size_t starts = count - b + 1;
  std::vector<std::int64_t> bad_prefix(starts + 1, 0);
  for (std::size_t k = 0; k < starts; ++k) {
    bool bad = next[k] > k + b - 1;
    bad_prefix[k + 1] = bad_prefix[k] + (bad ? 1 : 0);
  }
  std::size_t len = static_cast<std::size_t>(length);
  for (std::size_t t = 0; t + len <= count; ++t) {
    std::size_t first = t;
    std::size_t last = t + len - b;  // last stretch start inside the window
    if (bad_prefix[last + 1] - bad_prefix[first] == 0)
      return PwWindow{lo + static_cast<std::int64_t>(t), length};
  }
  return std::nullopt;
}

std::optional<std::int64_t> thickly_syndetic_gaps(const IntegerSet& s,
                                                  std::int64_t run_length,
                                                  std::int64_t lo,
                                                  std::int64_t hi) {
  if (run_length < 1) throw PreconditionError("run length must be >= 1");
  if (lo > hi) throw PreconditionError("range is empty");
  if (run_length > hi - lo + 1) return std::nullopt;
  auto mask = range_mask(s, lo, hi);
  std::size_t count = mask.size();
  std::size_t len = static_cast<std::size_t>(run_length);
  std::int64_t ones = 0;
  for (std::size_t k = 0; k < len; ++k) ones += mask[k];
  std::optional<std::int64_t> prev;
  std::optional<std::int64_t> best;
  for (std::size_t t = 0;; ++t) {
    if (ones == static_cast<std::int64_t>(len)) {
      std::int64_t start = lo + static_cast<std::int64_t>(t);
      if (prev) {
        std::int64_t gap = start - *prev;
        best = best ? std::max(*best, gap) : gap;
      }
      prev = start;
    }
    if (t + len >= count) break;
    ones += mask[t + len] - mask[t];
  }
  return best;
}

ThickTriple thick_triple() {
  IndexExpr n = IndexExpr::variable();
  IndexExpr ten_pow = IndexExpr::power(BigInt(10));
  IndexExpr ten_n = IndexExpr::constant(BigInt(10)) * n;
  IndexExpr one = IndexExpr::constant(BigInt(1));
  IndexExpr two = IndexExpr::constant(BigInt(2));

  // Decade blocks: [10^n, 10^n + 10n - 1], the following n points, and the
  // rest of the decade. The three residue tails keep every gap small while
  // staying disjoint from each other.
  IntegerSet a_blocks =
      IntegerSet::interval_family(ten_pow, ten_pow + ten_n - one, 1);
  IntegerSet b_blocks = IntegerSet::interval_family(
      ten_pow + ten_n, ten_pow + ten_n + n - one, 1);
  IntegerSet c_blocks = IntegerSet::interval_family(
      ten_pow + ten_n + n,
      ten_pow * IndexExpr::constant(BigInt(10)) - one, 1);

  // Positive residue classes as singleton block families, keeping the whole
  // construction inside the expression grammar.
  IntegerSet tens = IntegerSet::interval_family(ten_n, ten_n, 1);
  IntegerSet tens_minus_1 =
      IntegerSet::interval_family(ten_n - one, ten_n - one, 1);
  IntegerSet tens_minus_2 =
      IntegerSet::interval_family(ten_n - two, ten_n - two, 1);

  ThickTriple triple;
  triple.a = IntegerSet::union_of({a_blocks, tens});
  triple.b = IntegerSet::union_of({b_blocks, tens_minus_1});
  triple.c = IntegerSet::union_of({c_blocks, tens_minus_2});
  return triple;
}

IntegerSet block_support() {
  IndexExpr n = IndexExpr::variable();
  IndexExpr start = n * n + n;  // n(n+1)
  IndexExpr end = start + n;
  IntegerSet right = IntegerSet::interval_family(start, end, 0);
  return IntegerSet::union_of({right, right.negated()});
}

}  // namespace orbit
