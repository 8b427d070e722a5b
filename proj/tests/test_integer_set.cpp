// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "orbit/errors.hpp"
#include "orbit/integer_set.hpp"

using orbit::IndexExpr;
using orbit::IntegerSet;

namespace {

std::vector<std::uint8_t> mask_of(const IntegerSet& s, std::int64_t lo,
                                  std::int64_t hi) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(hi - lo + 1));
  s.fill_mask(lo, hi, out.data());
  return out;
}

// Random expression tree over a fixed pool of safe leaves.
IntegerSet random_tree(std::mt19937& rng, int depth) {
  if (depth == 0) {
    switch (rng() % 4) {
      case 0: {
        std::vector<std::int64_t> elems;
        for (int i = 0; i < 3; ++i)
          elems.push_back(static_cast<std::int64_t>(rng() % 101) - 50);
        return IntegerSet::finite(elems);
      }
      case 1:
        return IntegerSet::progression(1 + rng() % 7,
                                       static_cast<std::int64_t>(rng() % 7));
      case 2: {
        IndexExpr n = IndexExpr::variable();
        return IntegerSet::interval_family(n * n, n * n + n, 1);
      }
      default:
        return orbit::block_support();
    }
  }
  switch (rng() % 5) {
    case 0:
      return IntegerSet::union_of(
          {random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 1:
      return IntegerSet::intersection_of(
          {random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 2:
      return random_tree(rng, depth - 1).complemented();
    case 3:
      return random_tree(rng, depth - 1)
          .translated(static_cast<std::int64_t>(rng() % 7) - 3);
    default:
      return random_tree(rng, depth - 1).negated();
  }
}

}  // namespace

TEST_CASE("membership follows the expression tree") {
  IntegerSet evens = IntegerSet::progression(2, 0);
  CHECK_FALSE(evens.contains(7));
  CHECK(evens.contains(-4));
  CHECK(orbit::thick_triple().a.contains(19));
  IntegerSet everything =
      IntegerSet::finite(std::vector<std::int64_t>{}).complemented();
  for (std::int64_t i : {-100, 0, 31}) CHECK(everything.contains(i));
  CHECK_THROWS_AS(IntegerSet::progression(0, 0), orbit::PreconditionError);
}

TEST_CASE("index expressions evaluate in arbitrary precision") {
  IndexExpr n = IndexExpr::variable();
  IndexExpr e = IndexExpr::power(10) + IndexExpr::constant(10) * n -
                IndexExpr::constant(1);
  CHECK(e.eval(3) == orbit::BigInt(1029));
  CHECK(e.eval(30) == orbit::BigInt("1000000000000000000000000000299"));
  CHECK(IndexExpr::power(10).eval(0) == 1);
}

TEST_CASE("interval families reject overlapping block schedules") {
  IndexExpr n = IndexExpr::variable();
  // end(n) = 3n+5 >= start(n+1) = 3n+3: blocks collide.
  CHECK_THROWS_AS(IntegerSet::interval_family(
                      n * IndexExpr::constant(3),
                      n * IndexExpr::constant(3) + IndexExpr::constant(5), 0),
                  orbit::PreconditionError);
  // Reversed endpoints.
  CHECK_THROWS_AS(
      IntegerSet::interval_family(n + IndexExpr::constant(2), n, 0),
      orbit::PreconditionError);
}

TEST_CASE("family membership matches a direct block scan") {
  IndexExpr n = IndexExpr::variable();
  IntegerSet squares = IntegerSet::interval_family(n * n, n * n + n, 1);
  for (std::int64_t i = -5; i <= 500; ++i) {
    bool expect = false;
    for (std::int64_t k = 1; k * k <= i; ++k)
      expect = expect || (i >= k * k && i <= k * k + k);
    CHECK(squares.contains(i) == expect);
  }
}

TEST_CASE("fill_mask agrees with pointwise membership on random trees") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    IntegerSet s = random_tree(rng, 1 + static_cast<int>(rng() % 3));
    std::int64_t lo = static_cast<std::int64_t>(rng() % 200) - 150;
    std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 400);
    auto mask = mask_of(s, lo, hi);
    for (std::int64_t i = lo; i <= hi; ++i)
      CHECK(static_cast<bool>(mask[static_cast<std::size_t>(i - lo)]) ==
            s.contains(i));
  }
}

TEST_CASE("boolean algebra laws hold pointwise over the probe range") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 12; ++trial) {
    IntegerSet s = random_tree(rng, 2);
    IntegerSet t = random_tree(rng, 2);
    std::int64_t g = static_cast<std::int64_t>(rng() % 11) - 5;
    const std::int64_t lo = -10000, hi = 10000;

    auto lhs = mask_of(
        IntegerSet::union_of({s, t}).complemented(), lo, hi);
    auto rhs = mask_of(
        IntegerSet::intersection_of({s.complemented(), t.complemented()}), lo,
        hi);
    CHECK(lhs == rhs);

    CHECK(mask_of(s.complemented().complemented(), lo, hi) ==
          mask_of(s, lo, hi));

    CHECK(mask_of(IntegerSet::union_of({s, t}).translated(g), lo, hi) ==
          mask_of(IntegerSet::union_of({s.translated(g), t.translated(g)}), lo,
                  hi));

    CHECK(mask_of(s.negated().negated(), lo, hi) == mask_of(s, lo, hi));
  }
}

TEST_CASE("translate and negate move members as advertised") {
  IntegerSet s = IntegerSet::finite({1, 2});
  IntegerSet sym = orbit::symmetrized(s);
  for (std::int64_t i = -5; i <= 5; ++i)
    CHECK(sym.contains(i) == (i == 1 || i == 2 || i == -1 || i == -2));
  IntegerSet shifted = s.translated(10);
  CHECK(shifted.contains(11));
  CHECK(shifted.contains(12));
  CHECK_FALSE(shifted.contains(1));
  IntegerSet sym_blocks = orbit::symmetrized(orbit::thick_triple().a);
  for (std::int64_t i = 1; i <= 2000; ++i)
    CHECK(sym_blocks.contains(i) == sym_blocks.contains(-i));
}

TEST_CASE("max_gap scans consecutive members") {
  CHECK(orbit::max_gap(IntegerSet::progression(3, 0), -100, 100) == 3);
  CHECK(orbit::max_gap(orbit::thick_triple().a, 1, 10000) == 10);
  CHECK_FALSE(orbit::max_gap(IntegerSet::finite({5}), 0, 10).has_value());
}

TEST_CASE("max_run finds the longest block of consecutive members") {
  CHECK(orbit::max_run(IntegerSet::progression(2, 0), 0, 100) == 1);
  // The thirteenth block [182, 195] still fits under 200.
  CHECK(orbit::max_run(orbit::block_support(), 0, 200) == 14);
  CHECK(orbit::max_run(orbit::block_support(), 0, 200) ==
        oracle::max_run(oracle::members(orbit::block_support(), 0, 200)));
  // The 10-step tail extends the block at 1000 by one: [1000, 1030].
  CHECK(orbit::max_run(orbit::thick_triple().a, 1, 10000) == 31);
  CHECK(orbit::max_run(IntegerSet::finite(std::vector<std::int64_t>{}), 0,
                       10) == 0);
}

TEST_CASE("max_gap and max_run match the naive scans on the decade sets") {
  orbit::ThickTriple triple = orbit::thick_triple();
  const std::int64_t lo = 1, hi = 3000;
  const IntegerSet* sets[] = {&triple.a, &triple.b, &triple.c};
  bool (*oracles[])(std::int64_t) = {oracle::decade_a, oracle::decade_b,
                                     oracle::decade_c};
  for (int i = 0; i < 3; ++i) {
    std::vector<std::int64_t> m;
    for (std::int64_t v = lo; v <= hi; ++v) {
      CHECK(sets[i]->contains(v) == oracles[i](v));
      if (oracles[i](v)) m.push_back(v);
    }
    CHECK(orbit::max_gap(*sets[i], lo, hi) == oracle::max_gap(m));
    CHECK(orbit::max_run(*sets[i], lo, hi) == oracle::max_run(m));
  }
}

TEST_CASE("piecewise witness semantics") {
  // Syndetic on the whole range: the full interval qualifies.
  auto full = orbit::pw_syndetic_witness(IntegerSet::progression(2, 0), 2, 50,
                                         0, 10000);
  REQUIRE(full.has_value());
  CHECK(full->start == 0);
  CHECK(full->length == 50);

  // Ten consecutive support members first appear in the ninth block.
  auto run = orbit::pw_syndetic_witness(orbit::block_support(), 1, 10, 0, 200);
  REQUIRE(run.has_value());
  CHECK(run->start == 90);
  CHECK(run->length == 10);

  auto absent =
      orbit::pw_syndetic_witness(IntegerSet::finite({0}), 1, 2, -10, 10);
  CHECK_FALSE(absent.has_value());

  // A window shorter than the stretch bound has nothing to violate.
  auto vacuous =
      orbit::pw_syndetic_witness(IntegerSet::finite({0}), 5, 3, -10, 10);
  REQUIRE(vacuous.has_value());
  CHECK(vacuous->start == -10);
}

TEST_CASE("piecewise witness spans the members when anchored at the first") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerSet s = random_tree(rng, 2);
    auto m = oracle::members(s, -300, 300);
    if (m.size() < 2) continue;
    auto gap = oracle::max_gap(m);
    REQUIRE(gap.has_value());
    std::int64_t span = m.back() - m.front() + 1;
    auto w = orbit::pw_syndetic_witness(s, *gap, span, m.front(), m.back());
    REQUIRE(w.has_value());
    CHECK(w->start == m.front());
    CHECK(w->length == span);
  }
}

TEST_CASE("run start gaps grow with the block ladder") {
  CHECK(orbit::thickly_syndetic_gaps(
            IntegerSet::finite(std::vector<std::int64_t>{}).complemented(), 5,
            0, 100) == 1);
  CHECK(orbit::thickly_syndetic_gaps(orbit::block_support(), 3, 0, 500) == 24);
  CHECK(orbit::thickly_syndetic_gaps(orbit::block_support(), 3, 0, 1000) == 34);
  CHECK_FALSE(orbit::thickly_syndetic_gaps(IntegerSet::progression(2, 0), 2, 0,
                                           100)
                  .has_value());
}

TEST_CASE("decade triple reproduces its defining properties") {
  orbit::ThickTriple triple = orbit::thick_triple();
  IntegerSet abc =
      IntegerSet::intersection_of({triple.a, triple.b, triple.c});
  CHECK(orbit::max_run(abc, 1, 100000) == 0);

  IntegerSet ab = IntegerSet::intersection_of({triple.a, triple.b});
  std::int64_t first_ab = -1;
  for (std::int64_t i = 1; i <= 100000 && first_ab < 0; ++i)
    if (ab.contains(i)) first_ab = i;
  CHECK(first_ab == 19);

  // The interior blocks of C start above every A block of the same decade.
  for (std::int64_t i = 122; i <= 999; ++i)
    if (triple.a.contains(i)) CHECK(i % 10 == 0);

  IntegerSet sym_abc = IntegerSet::intersection_of(
      {orbit::symmetrized(triple.a), orbit::symmetrized(triple.b),
       orbit::symmetrized(triple.c)});
  CHECK(orbit::max_run(sym_abc, -100000, 100000) == 0);
}

TEST_CASE("predicate sets answer through the callback") {
  IntegerSet odd_squares = IntegerSet::predicate(
      [](std::int64_t i) {
        if (i < 0) return false;
        std::int64_t r = 0;
        while (r * r < i) ++r;
        return r * r == i && r % 2 == 1;
      },
      "odd squares");
  CHECK(odd_squares.contains(9));
  CHECK_FALSE(odd_squares.contains(16));
  auto mask = mask_of(odd_squares, 0, 30);
  CHECK(mask[1] == 1);
  CHECK(mask[25] == 1);
  CHECK(mask[4] == 0);
  CHECK(odd_squares.describe() == "pred:odd squares");
}
