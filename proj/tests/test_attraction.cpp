// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "orbit/attraction.hpp"
#include "orbit/density.hpp"
#include "orbit/errors.hpp"
#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/shift_space.hpp"

using orbit::Alphabet;
using orbit::AttractorCover;
using orbit::FolnerSequence;
using orbit::Ratio;
using orbit::SymbolicPoint;
using orbit::Word;

namespace {

std::vector<std::string> kept_texts(const AttractorCover& cover) {
  std::vector<std::string> out;
  for (const auto& entry : cover.kept) out.push_back(entry.word.text());
  return out;
}

SymbolicPoint alternating() {
  return orbit::make_periodic(Word::from_text(Alphabet(2), "01"), 0);
}

}  // namespace

TEST_CASE("period-two orbit keeps its two windows with half density each") {
  AttractorCover cover =
      orbit::attractor_cover(alternating(), FolnerSequence::standard(), 1, 100,
                             orbit::make_ratio(3, 10), orbit::make_ratio(1, 2));
  CHECK(kept_texts(cover) == std::vector<std::string>{"010", "101"});
  for (const auto& entry : cover.kept) {
    CHECK(entry.upper - orbit::make_ratio(1, 2) <= orbit::make_ratio(1, 100));
    CHECK(orbit::make_ratio(1, 2) - entry.lower <= orbit::make_ratio(1, 100));
  }
  // The two cylinders tile the orbit: union sojourn is everything.
  CHECK(cover.union_sojourn.headline_lower == Ratio(1));
  CHECK(orbit::cover_in_orbit(cover, alternating()));
  CHECK(orbit::follower_violations(cover, alternating()).empty());
}

TEST_CASE("support indicator covers collapse to the pure blocks") {
  SymbolicPoint z = orbit::make_indicator(orbit::block_support());
  Ratio tol(3, 10);
  Ratio half(1, 2);
  AttractorCover f1 = orbit::attractor_cover(z, FolnerSequence::block_form(),
                                             1, 60, tol, half);
  CHECK(kept_texts(f1) == std::vector<std::string>{"111"});
  AttractorCover h1 = orbit::attractor_cover(z, FolnerSequence::gap_form(), 1,
                                             60, tol, half);
  CHECK(kept_texts(h1) == std::vector<std::string>{"000"});
  AttractorCover f2 = orbit::attractor_cover(z, FolnerSequence::block_form(),
                                             2, 60, tol, half);
  CHECK(kept_texts(f2) == std::vector<std::string>{"11111"});
  AttractorCover h2 = orbit::attractor_cover(z, FolnerSequence::gap_form(), 2,
                                             60, tol, half);
  CHECK(kept_texts(h2) == std::vector<std::string>{"00000"});

  CHECK(orbit::cover_in_orbit(f1, z));
  CHECK(orbit::follower_violations(f1, z).empty());
  CHECK_FALSE(orbit::covers_equal_kept(f1, h1));
  CHECK(orbit::covers_equal_kept(f1, f1));
  CHECK_THROWS_AS(orbit::covers_equal_kept(f1, f2),
                  orbit::PreconditionError);
}

TEST_CASE("cover ratios match naive window counting") {
  SymbolicPoint z = orbit::make_indicator(orbit::block_support());
  FolnerSequence f = FolnerSequence::block_form();
  AttractorCover cover =
      orbit::attractor_cover(z, f, 1, 40, orbit::make_ratio(1, 20),
                             orbit::make_ratio(1, 2));
  for (const auto& entry : cover.kept) {
    orbit::Cylinder c{entry.word, -1};
    Ratio upper(-1), lower(2);
    for (std::int64_t n = 20; n <= 40; ++n) {
      auto w = f.interval(n);
      Ratio r = orbit::make_ratio(oracle::count_visits(z, c, w.lo, w.hi),
                                  w.hi - w.lo + 1);
      upper = std::max(upper, r);
      lower = std::min(lower, r);
    }
    CHECK(entry.upper == upper);
    CHECK(entry.lower == lower);
  }
}

TEST_CASE("boundary tolerance flips edge words under a bare shift") {
  // At tol 1/20 the one-per-window edge words sit at 1/16 and survive; the
  // shifted point sees the opposite edges. Equality needs either the edge
  // words dropped (tol above 1/16) or the windows translated along.
  SymbolicPoint z = orbit::make_indicator(orbit::block_support());
  FolnerSequence f = FolnerSequence::block_form();
  Ratio half(1, 2);
  Ratio tight(1, 20);

  AttractorCover base = orbit::attractor_cover(z, f, 1, 60, tight, half);
  CHECK(kept_texts(base) == std::vector<std::string>{"011", "110", "111"});

  SymbolicPoint shifted = orbit::shift_point(z, 1);
  AttractorCover moved = orbit::attractor_cover(shifted, f, 1, 60, tight, half);
  CHECK(kept_texts(moved) == std::vector<std::string>{"100", "110", "111"});
  CHECK_FALSE(orbit::covers_equal_kept(base, moved));

  // Translating the window sequence along with the point restores the
  // count bijection exactly, entry values included.
  AttractorCover carried = orbit::attractor_cover(
      shifted, f.translated(-1), 1, 60, tight, half);
  CHECK(orbit::covers_equal_kept(base, carried));
  REQUIRE(base.kept.size() == carried.kept.size());
  for (std::size_t i = 0; i < base.kept.size(); ++i) {
    CHECK(base.kept[i].upper == carried.kept[i].upper);
    CHECK(base.kept[i].lower == carried.kept[i].lower);
  }

  // Above the edge ratio both points keep the pure block word alone.
  Ratio loose(7, 100);
  AttractorCover base_loose = orbit::attractor_cover(z, f, 1, 60, loose, half);
  AttractorCover moved_loose =
      orbit::attractor_cover(shifted, f, 1, 60, loose, half);
  CHECK(kept_texts(base_loose) == std::vector<std::string>{"111"});
  CHECK(orbit::covers_equal_kept(base_loose, moved_loose));
}

TEST_CASE("ladder point cover keeps the two constant words") {
  SymbolicPoint x = orbit::alternating_block_point();
  FolnerSequence f = FolnerSequence::standard();
  Ratio tol(1, 20);
  Ratio half(1, 2);
  AttractorCover cover = orbit::attractor_cover(x, f, 1, 720, tol, half);
  CHECK(kept_texts(cover) == std::vector<std::string>{"000", "111"});
  CHECK(orbit::cover_in_orbit(cover, x));
  CHECK(orbit::follower_violations(cover, x).empty());
  CHECK_FALSE(orbit::s_generic_probe(x, f, 1, 720, orbit::make_ratio(1, 10),
                                     half));

  // Kept sets are stable under a single patch and under small shifts.
  SymbolicPoint patched = orbit::mutate_finitely(x, {{0, 1 - x.eval(0)}});
  AttractorCover mutated = orbit::attractor_cover(patched, f, 1, 720, tol, half);
  CHECK(orbit::covers_equal_kept(cover, mutated));
  for (std::int64_t g = -3; g <= 3; ++g) {
    AttractorCover moved = orbit::attractor_cover(orbit::shift_point(x, g), f,
                                                  1, 720, tol, half);
    CHECK(orbit::covers_equal_kept(cover, moved));
  }
}

TEST_CASE("refining the resolution projects onto the coarser cover") {
  SymbolicPoint pts[] = {alternating(),
                         orbit::make_indicator(orbit::block_support())};
  FolnerSequence seqs[] = {FolnerSequence::standard(),
                           FolnerSequence::block_form()};
  Ratio tol(3, 10);
  Ratio half(1, 2);
  for (const auto& x : pts) {
    for (const auto& f : seqs) {
      AttractorCover coarse = orbit::attractor_cover(x, f, 1, 60, tol, half);
      AttractorCover fine = orbit::attractor_cover(x, f, 2, 60, tol, half);
      std::vector<std::string> kept = kept_texts(coarse);
      for (const auto& entry : fine.kept) {
        std::string central = entry.word.text().substr(1, 3);
        CHECK(std::find(kept.begin(), kept.end(), central) != kept.end());
      }
    }
  }
}

TEST_CASE("follower checks notice an artificially broken cover") {
  AttractorCover cover =
      orbit::attractor_cover(alternating(), FolnerSequence::standard(), 1, 100,
                             orbit::make_ratio(3, 10), orbit::make_ratio(1, 2));
  AttractorCover broken = cover;
  broken.kept.erase(
      std::remove_if(broken.kept.begin(), broken.kept.end(),
                     [](const AttractorCover::Entry& e) {
                       return e.word.text() == "101";
                     }),
      broken.kept.end());
  std::vector<Word> violations =
      orbit::follower_violations(broken, alternating());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].text() == "010");

  AttractorCover injected = cover;
  injected.kept.push_back(AttractorCover::Entry{
      Word::from_text(Alphabet(2), "000"), Ratio(0), Ratio(0)});
  CHECK_FALSE(orbit::cover_in_orbit(injected, alternating()));
}

TEST_CASE("covers are deterministic across thread counts") {
  SymbolicPoint z = orbit::make_indicator(orbit::block_support());
  AttractorCover one =
      orbit::attractor_cover(z, FolnerSequence::block_form(), 2, 60,
                             orbit::make_ratio(1, 20), orbit::make_ratio(1, 2),
                             1);
  AttractorCover four =
      orbit::attractor_cover(z, FolnerSequence::block_form(), 2, 60,
                             orbit::make_ratio(1, 20), orbit::make_ratio(1, 2),
                             4);
  CHECK(orbit::covers_equal_kept(one, four));
  REQUIRE(one.kept.size() == four.kept.size());
  for (std::size_t i = 0; i < one.kept.size(); ++i) {
    CHECK(one.kept[i].upper == four.kept[i].upper);
    CHECK(one.kept[i].lower == four.kept[i].lower);
  }
  REQUIRE(one.union_sojourn.ratios.size() == four.union_sojourn.ratios.size());
  for (std::size_t i = 0; i < one.union_sojourn.ratios.size(); ++i)
    CHECK(one.union_sojourn.ratios[i].second ==
          four.union_sojourn.ratios[i].second);
}

TEST_CASE("cover rejects out-of-range parameters") {
  CHECK_THROWS_AS(
      orbit::attractor_cover(alternating(), FolnerSequence::standard(), -1, 10,
                             orbit::make_ratio(1, 20), orbit::make_ratio(1, 2)),
      orbit::PreconditionError);
  CHECK_THROWS_AS(
      orbit::attractor_cover(alternating(), FolnerSequence::standard(), 1, 10,
                             Ratio(0), orbit::make_ratio(1, 2)),
      orbit::PreconditionError);
  CHECK_THROWS_AS(
      orbit::attractor_cover(alternating(), FolnerSequence::standard(), 8, 10,
                             orbit::make_ratio(1, 20), orbit::make_ratio(1, 2)),
      orbit::PreconditionError);
}
