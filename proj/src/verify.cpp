// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/verify.hpp"

#include <sstream>

#include "orbit/attraction.hpp"
#include "orbit/chaos.hpp"
#include "orbit/density.hpp"
#include "orbit/errors.hpp"
#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/shift_space.hpp"

namespace orbit {
namespace {

std::string kept_words(const AttractorCover& cover) {
  std::string out = "{";
  for (std::size_t i = 0; i < cover.kept.size(); ++i) {
    if (i) out += ",";
    out += cover.kept[i].word.text();
  }
  return out + "}";
}

bool kept_is(const AttractorCover& cover,
             const std::vector<std::string>& words) {
  if (cover.kept.size() != words.size()) return false;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (cover.kept[i].word.text() != words[i]) return false;
  return true;
}

std::vector<CheckLine> verify_blocks(std::int64_t threads) {
  std::vector<CheckLine> lines;
  SymbolicPoint z = make_indicator(block_support());
  FolnerSequence f = FolnerSequence::block_form();
  FolnerSequence h = FolnerSequence::gap_form();
  Ratio tol3(3, 10);
  Ratio half(1, 2);

  AttractorCover f1 = attractor_cover(z, f, 1, 60, tol3, half, threads);
  lines.push_back({"cover along block-form at k=1 keeps {111}",
                   kept_is(f1, {"111"}), "kept=" + kept_words(f1)});
  AttractorCover h1 = attractor_cover(z, h, 1, 60, tol3, half, threads);
  lines.push_back({"cover along gap-form at k=1 keeps {000}",
                   kept_is(h1, {"000"}), "kept=" + kept_words(h1)});
  AttractorCover f2 = attractor_cover(z, f, 2, 60, tol3, half, threads);
  lines.push_back({"cover along block-form at k=2 keeps {11111}",
                   kept_is(f2, {"11111"}), "kept=" + kept_words(f2)});
  AttractorCover h2 = attractor_cover(z, h, 2, 60, tol3, half, threads);
  lines.push_back({"cover along gap-form at k=2 keeps {00000}",
                   kept_is(h2, {"00000"}), "kept=" + kept_words(h2)});

  Cylinder ones{Word::from_text(Alphabet(2), "1"), 0};
  DensityReport visits = sojourn(z, {ones}, f, 40, half, threads);
  bool all_one = true;
  for (const auto& [n, r] : visits.ratios) all_one = all_one && r == 1;
  lines.push_back({"sojourn of [1]@0 along block-form is exactly 1 at every index",
                   all_one,
                   "headline_lower=" + to_fraction(visits.headline_lower)});

  for (const FolnerSequence* seq : {&f, &h}) {
    bool decays = true;
    std::ostringstream ev;
    for (std::int64_t hh : {1, 3, 5}) {
      Ratio prev(2);
      for (std::int64_t n : {10, 20, 40, 80}) {
        Ratio d = defect(*seq, hh, n);
        Ratio bound = make_ratio(2 * hh, seq->size(n));
        decays = decays && d <= bound && d <= prev;
        prev = d;
        if (hh == 1) ev << to_fraction(d) << " ";
      }
    }
    lines.push_back({"defect decay along " + seq->label(), decays,
                     "h=1 profile: " + ev.str()});
  }
  return lines;
}

std::vector<CheckLine> verify_decades(std::int64_t) {
  std::vector<CheckLine> lines;
  ThickTriple triple = thick_triple();
  IntegerSet abc = IntegerSet::intersection_of(
      {triple.a, triple.b, triple.c});

  std::int64_t hi = 100000;
  bool triple_empty = max_run(abc, 1, hi) == 0;
  lines.push_back({"triple intersection empty on [1,100000]", triple_empty,
                   triple_empty ? "no member found" : "member exists"});

  IntegerSet sym_abc = IntegerSet::intersection_of(
      {symmetrized(triple.a), symmetrized(triple.b), symmetrized(triple.c)});
  bool sym_empty = max_run(sym_abc, -hi, hi) == 0;
  lines.push_back({"symmetrized triple empty on [-100000,100000]", sym_empty,
                   sym_empty ? "no member found" : "member exists"});

  std::ostringstream gaps;
  bool gap_ok = true;
  for (const auto& [name, set] :
       {std::pair<const char*, const IntegerSet*>{"a", &triple.a},
        {"b", &triple.b},
        {"c", &triple.c}}) {
    auto gap = max_gap(*set, 1, hi);
    gap_ok = gap_ok && gap && *gap <= 10;
    gaps << name << "=" << (gap ? std::to_string(*gap) : "absent") << " ";
  }
  lines.push_back({"max gap at most 10 for each of the triple on [1,100000]",
                   gap_ok, gaps.str()});

  std::ostringstream runs;
  bool run_grows_a = true;
  std::int64_t prev_run = 0;
  for (std::int64_t h : {1000, 10000, 100000}) {
    std::int64_t r = max_run(triple.a, 1, h);
    run_grows_a = run_grows_a && r > prev_run;
    prev_run = r;
    runs << r << " ";
  }
  lines.push_back({"run lengths of the first set grow along the horizon ladder",
                   run_grows_a, "runs: " + runs.str()});

  std::ostringstream runs_c;
  bool run_grows_c = true;
  prev_run = 0;
  for (std::int64_t h : {1000, 10000, 100000}) {
    std::int64_t r = max_run(triple.c, 1, h);
    run_grows_c = run_grows_c && r > prev_run;
    prev_run = r;
    runs_c << r << " ";
  }
  lines.push_back({"run lengths of the third set grow along the horizon ladder",
                   run_grows_c, "runs: " + runs_c.str()});

  IntegerSet ab = IntegerSet::intersection_of({triple.a, triple.b});
  IntegerSet bc = IntegerSet::intersection_of({triple.b, triple.c});
  IntegerSet ac = IntegerSet::intersection_of({triple.a, triple.c});
  std::int64_t pair_hi = 10000;
  bool pairs_nonempty = max_run(ab, 1, pair_hi) > 0 &&
                        max_run(bc, 1, pair_hi) > 0 &&
                        max_run(ac, 1, pair_hi) > 0;
  std::int64_t min_ab = 0;
  for (std::int64_t i = 1; i <= hi; ++i)
    if (ab.contains(i)) {
      min_ab = i;
      break;
    }
  lines.push_back({"pairwise intersections nonempty with first shared point 19",
                   pairs_nonempty && min_ab == 19,
                   "min(a&b)=" + std::to_string(min_ab)});
  return lines;
}

std::vector<CheckLine> verify_alternating(std::int64_t threads) {
  std::vector<CheckLine> lines;
  SymbolicPoint x = alternating_block_point();
  FolnerSequence f = FolnerSequence::standard();
  Ratio tol(1, 20);
  Ratio half(1, 2);

  AttractorCover cover = attractor_cover(x, f, 2, 5040, tol, half, threads);
  lines.push_back({"cover at k=2 keeps {00000,11111}",
                   kept_is(cover, {"00000", "11111"}),
                   "kept=" + kept_words(cover)});
  Ratio floor(9, 10);
  bool sojourn_high = cover.union_sojourn.headline_lower >= floor;
  lines.push_back(
      {"union sojourn lower headline at least 9/10", sojourn_high,
       "lower=" + to_fraction(cover.union_sojourn.headline_lower)});

  bool generic = s_generic_probe(x, f, 2, 5040, tol, half, threads);
  lines.push_back({"the point is not generic for its own cover", !generic,
                   generic ? "central window kept" : "central window not kept"});
  return lines;
}

}  // namespace

std::vector<CheckLine> verify_example(const std::string& id,
                                      std::int64_t threads) {
  if (id == "blocks") return verify_blocks(threads);
  if (id == "decades") return verify_decades(threads);
  if (id == "alternating") return verify_alternating(threads);
  throw ParseError("example", "unknown construction id '" + id +
                                  "' (want blocks, decades, alternating)");
}

bool all_passed(const std::vector<CheckLine>& lines) {
  for (const auto& line : lines)
    if (!line.pass) return false;
  return true;
}

}  // namespace orbit
