// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/shift_space.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "orbit/errors.hpp"

namespace orbit {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw PreconditionError("coordinate out of range");
  return r;
}

}  // namespace

Alphabet::Alphabet(int size_in) : size(size_in) {
  if (size < 2) throw PreconditionError("alphabet needs at least two symbols");
  if (size > 10)
    throw PreconditionError("alphabet sizes above ten are not supported");
}

Word::Word(Alphabet alphabet, std::vector<std::uint8_t> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw PreconditionError("empty word");
  for (std::uint8_t s : symbols_)
    if (!alphabet_.valid_symbol(s))
      throw PreconditionError("word symbol outside the alphabet");
}

Word Word::from_text(Alphabet alphabet, const std::string& digits) {
  if (digits.empty()) throw ParseError("word", "empty word");
  std::vector<std::uint8_t> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError("word", std::string("bad symbol character '") + c + "'");
    int s = c - '0';
    if (!alphabet.valid_symbol(s))
      throw ParseError("word", std::string("symbol '") + c +
                                   "' outside the alphabet");
    symbols.push_back(static_cast<std::uint8_t>(s));
  }
  return Word(alphabet, std::move(symbols));
}

std::string Word::text() const {
  std::string out;
  out.reserve(symbols_.size());
  for (std::uint8_t s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

Ratio MetricValue::value() const {
  if (exponent < 0) throw PreconditionError("negative metric exponent");
  BigInt denom = boost::multiprecision::pow(BigInt(2),
                                            static_cast<unsigned>(exponent));
  return Ratio(BigInt(1), denom);
}

std::string MetricValue::text() const {
  std::string base = "2^-" + std::to_string(exponent);
  if (exponent == 0) base = "1";
  return kind == Kind::exact ? base : "<=" + base;
}

bool metric_less(const MetricValue& a, const MetricValue& b) {
  // 2^-e compares by exponent alone
  if (a.exponent != b.exponent) return a.exponent > b.exponent;
  return a.kind == MetricValue::Kind::upper_bound &&
         b.kind == MetricValue::Kind::exact;
}

class SymbolicPoint::Rule {
public:
  virtual ~Rule() = default;
  virtual int symbol_at(std::int64_t i) const = 0;
};

SymbolicPoint::SymbolicPoint(Alphabet alphabet,
                             std::shared_ptr<const Rule> rule,
                             std::int64_t offset, std::string label)
    : alphabet_(alphabet),
      rule_(std::move(rule)),
      offset_(offset),
      label_(std::move(label)) {
  if (!rule_) throw PreconditionError("point needs an evaluation rule");
}

int SymbolicPoint::eval(std::int64_t i) const {
  return rule_->symbol_at(checked_add(i, offset_));
}

SymbolicPoint SymbolicPoint::shifted(std::int64_t g) const {
  return SymbolicPoint(alphabet_, rule_, checked_add(offset_, g), label_);
}

namespace {

class PeriodicRule final : public SymbolicPoint::Rule {
public:
  PeriodicRule(Word word, std::int64_t phase)
      : word_(std::move(word)), phase_(phase) {}
  int symbol_at(std::int64_t i) const override {
    std::int64_t p = word_.size();
    std::int64_t k = (i - phase_) % p;
    if (k < 0) k += p;
    return word_.symbol(k);
  }

private:
  Word word_;
  std::int64_t phase_;
};

class IndicatorRule final : public SymbolicPoint::Rule {
public:
  explicit IndicatorRule(IntegerSet set) : set_(std::move(set)) {}
  int symbol_at(std::int64_t i) const override {
    return set_.contains(i) ? 1 : 0;
  }

private:
  IntegerSet set_;
};

// Factorials that fit an int64. 21! overflows, so ladder levels 2..20 cover
// every representable coordinate.
constexpr int k_max_level = 20;

const std::int64_t* factorials() {
  static const auto table = [] {
    std::array<std::int64_t, k_max_level + 1> t{};
    t[0] = 1;
    for (int k = 1; k <= k_max_level; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table.data();
}

int ladder_symbol(std::int64_t p) {
  // p >= 0: position p of the limit word. Levels append filler runs on
  // [m!, (m+1)!), filler 0 for even m, 1 for odd m, over the seed "01".
  if (p == 0) return 0;
  if (p == 1) return 1;
  const std::int64_t* fact = factorials();
  int m = 2;
  while (m < k_max_level && p >= fact[m + 1]) ++m;
  return m % 2 == 0 ? 0 : 1;
}

class AlternatingBlockRule final : public SymbolicPoint::Rule {
public:
  int symbol_at(std::int64_t i) const override {
    // Coordinate -j mirrors coordinate j-1; -(i+1) avoids overflow at the
    // far end of the range.
    if (i >= 0) return ladder_symbol(i);
    return ladder_symbol(-(i + 1));
  }
};

class WordStreamRule final : public SymbolicPoint::Rule {
public:
  int symbol_at(std::int64_t i) const override {
    if (i < 0) return 0;
    // The length-l segment holds all 2^l words of length l in numeric order,
    // most significant bit first, spanning l*2^l positions.
    unsigned __int128 p = static_cast<unsigned __int128>(i);
    unsigned __int128 base = 0;
    int l = 1;
    for (;; ++l) {
      unsigned __int128 seg =
          static_cast<unsigned __int128>(l) << l;  // l * 2^l
      if (p < base + seg) break;
      base += seg;
    }
    std::uint64_t rel = static_cast<std::uint64_t>(p - base);
    std::uint64_t q = rel / static_cast<std::uint64_t>(l);
    int r = static_cast<int>(rel % static_cast<std::uint64_t>(l));
    return static_cast<int>((q >> (l - 1 - r)) & 1u);
  }
};

class MutationRule final : public SymbolicPoint::Rule {
public:
  MutationRule(SymbolicPoint base, std::map<std::int64_t, int> patches)
      : base_(std::move(base)), patches_(std::move(patches)) {}
  int symbol_at(std::int64_t i) const override {
    auto it = patches_.find(i);
    if (it != patches_.end()) return it->second;
    return base_.eval(i);
  }

private:
  SymbolicPoint base_;
  std::map<std::int64_t, int> patches_;
};

}  // namespace

SymbolicPoint make_periodic(const Word& word, std::int64_t phase) {
  Alphabet a = word.alphabet();
  auto rule = std::make_shared<PeriodicRule>(word, phase);
  return SymbolicPoint(a, std::move(rule), 0,
                       "periodic(" + word.text() + ")");
}

SymbolicPoint make_indicator(const IntegerSet& set) {
  if (!set.valid()) throw PreconditionError("indicator of an empty expression");
  auto rule = std::make_shared<IndicatorRule>(set);
  return SymbolicPoint(Alphabet(2), std::move(rule), 0,
                       "indicator(" + set.describe() + ")");
}

Word alternating_block_word(int n) {
  if (n < 1) throw PreconditionError("block ladder starts at level 1");
  if (n > 12)
    throw PreconditionError("block ladder word too long to materialize");
  const std::int64_t* fact = factorials();
  std::int64_t len = fact[n + 1];
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(len));
  for (std::int64_t p = 0; p < len; ++p)
    symbols[static_cast<std::size_t>(p)] =
        static_cast<std::uint8_t>(ladder_symbol(p));
  return Word(Alphabet(2), std::move(symbols));
}

SymbolicPoint alternating_block_point() {
  return SymbolicPoint(Alphabet(2), std::make_shared<AlternatingBlockRule>(), 0,
                       "alternating-blocks");
}

SymbolicPoint word_stream_point() {
  return SymbolicPoint(Alphabet(2), std::make_shared<WordStreamRule>(), 0,
                       "word-stream");
}

SymbolicPoint mutate_finitely(
    const SymbolicPoint& x,
    const std::vector<std::pair<std::int64_t, int>>& patches) {
  std::map<std::int64_t, int> map;
  for (const auto& [index, symbol] : patches) {
    if (!x.alphabet().valid_symbol(symbol))
      throw PreconditionError("patch symbol outside the alphabet");
    if (!map.emplace(index, symbol).second)
      throw PreconditionError("duplicate patch index");
  }
  auto rule = std::make_shared<MutationRule>(x, std::move(map));
  return SymbolicPoint(x.alphabet(), std::move(rule), 0,
                       "mutation(" + x.describe() + ")");
}

SymbolicPoint shift_point(const SymbolicPoint& x, std::int64_t g) {
  return x.shifted(g);
}

MetricValue metric_at_resolution(const SymbolicPoint& x,
                                 const SymbolicPoint& y, std::int64_t r) {
  if (x.alphabet() != y.alphabet())
    throw PreconditionError("metric needs matching alphabets");
  if (r < 0) throw PreconditionError("resolution must be nonnegative");
  for (std::int64_t n = 0; n <= r; ++n) {
    if (x.eval(n) != y.eval(n) || x.eval(-n) != y.eval(-n))
      return MetricValue::exact_at(n);
  }
  return MetricValue::upper(r + 1);
}

Word window(const SymbolicPoint& x, std::int64_t m, std::int64_t len) {
  if (len < 1) throw PreconditionError("window length must be >= 1");
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(len));
  for (std::int64_t k = 0; k < len; ++k)
    symbols[static_cast<std::size_t>(k)] =
        static_cast<std::uint8_t>(x.eval(m + k));
  return Word(x.alphabet(), std::move(symbols));
}

bool in_cylinder(const SymbolicPoint& x, const Cylinder& c) {
  return window(x, c.position, c.word.size()) == c.word;
}

}  // namespace orbit
