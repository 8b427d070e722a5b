// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/attraction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "orbit/errors.hpp"
#include "orbit/kernels.hpp"
#include "orbit/parallel.hpp"

namespace orbit {
namespace {

// Word ids are base-alphabet encodings of the window, leftmost symbol most
// significant, and must fit the u16 counting kernels.
constexpr std::uint32_t k_max_ids = 65536;

struct ScanBuffers {
  std::int64_t id_lo = 0;  // ids cover positions id_lo..id_hi
  std::int64_t id_hi = 0;
  std::vector<std::uint16_t> ids;
  std::uint32_t id_count = 0;
};

// Materializes symbols over the union of the sequence windows widened by k
// and encodes every centered window into an id, one symbol pass total.
ScanBuffers materialize_ids(const SymbolicPoint& x, std::int64_t lo,
                            std::int64_t hi, std::int64_t k) {
  std::uint32_t a = static_cast<std::uint32_t>(x.alphabet().size);
  std::int64_t length = 2 * k + 1;
  std::uint64_t ids = 1;
  for (std::int64_t p = 0; p < length; ++p) {
    ids *= a;
    if (ids > k_max_ids)
      throw PreconditionError("resolution too deep to tabulate words");
  }

  ScanBuffers buffers;
  buffers.id_lo = lo;
  buffers.id_hi = hi;
  buffers.id_count = static_cast<std::uint32_t>(ids);

  std::int64_t sym_lo = lo - k;
  std::int64_t sym_hi = hi + k;
  std::size_t sym_count = static_cast<std::size_t>(sym_hi - sym_lo + 1);
  std::vector<std::uint8_t> sym(sym_count);
  for (std::int64_t i = sym_lo; i <= sym_hi; ++i)
    sym[static_cast<std::size_t>(i - sym_lo)] =
        static_cast<std::uint8_t>(x.eval(i));

  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  buffers.ids.resize(count);
  std::uint32_t head = buffers.id_count / a;  // a^(length-1)
  std::uint32_t id = 0;
  for (std::int64_t p = 0; p < length; ++p)
    id = id * a + sym[static_cast<std::size_t>(p)];
  buffers.ids[0] = static_cast<std::uint16_t>(id);
  for (std::size_t g = 1; g < count; ++g) {
    id = (id % head) * a + sym[g + static_cast<std::size_t>(length) - 1];
    buffers.ids[g] = static_cast<std::uint16_t>(id);
  }
  return buffers;
}

Word word_of_id(const Alphabet& alphabet, std::int64_t k, std::uint32_t id) {
  std::int64_t length = 2 * k + 1;
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(length));
  std::uint32_t a = static_cast<std::uint32_t>(alphabet.size);
  for (std::int64_t p = length; p-- > 0;) {
    symbols[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(id % a);
    id /= a;
  }
  return Word(alphabet, std::move(symbols));
}

std::int64_t ceil_ratio_times(std::int64_t n, const Ratio& fraction) {
  Ratio scaled = (Ratio(1) - fraction) * n;
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  BigInt q = num / den;
  if (q * den < num) q += 1;
  return static_cast<std::int64_t>(q);
}

}  // namespace

AttractorCover attractor_cover(const SymbolicPoint& x,
                               const FolnerSequence& f, std::int64_t k,
                               std::int64_t horizon, const Ratio& tol,
                               const Ratio& headline_fraction,
                               std::int64_t threads) {
  if (k < 0) throw PreconditionError("resolution must be nonnegative");
  if (horizon < 1) throw PreconditionError("cover horizon must be >= 1");
  if (tol <= 0 || tol >= 1)
    throw PreconditionError("tolerance must be in (0, 1)");
  if (headline_fraction <= 0 || headline_fraction > 1)
    throw PreconditionError("headline fraction must be in (0, 1]");

  // Window extents for every index up front; the id buffer spans their hull.
  std::vector<FolnerSequence::Interval> windows;
  windows.reserve(static_cast<std::size_t>(horizon + 1));
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    FolnerSequence::Interval w = f.interval(n);
    if (n == 0) {
      lo = w.lo;
      hi = w.hi;
    } else {
      lo = std::min(lo, w.lo);
      hi = std::max(hi, w.hi);
    }
    windows.push_back(w);
  }

  ScanBuffers buffers = materialize_ids(x, lo, hi, k);

  // Candidate ids: every word actually visited inside some window. For the
  // binary alphabet at shallow resolution this is the full id space anyway.
  std::vector<std::uint8_t> seen(buffers.id_count, 0);
  for (const auto& w : windows)
    for (std::int64_t g = w.lo; g <= w.hi; ++g)
      seen[buffers.ids[static_cast<std::size_t>(g - lo)]] = 1;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t id = 0; id < buffers.id_count; ++id)
    if (seen[id]) candidates.push_back(id);

  std::int64_t window_lo_index = ceil_ratio_times(horizon, headline_fraction);

  struct PerWord {
    Ratio upper;
    Ratio lower;
    bool kept = false;
    std::vector<std::int64_t> counts;  // per index, retained when kept
  };
  std::vector<PerWord> results(candidates.size());

  run_chunked(
      candidates.size(), resolve_thread_count(threads),
      [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> counts(
            static_cast<std::size_t>(horizon + 1));
        for (std::size_t c = begin; c < end; ++c) {
          std::uint16_t id = static_cast<std::uint16_t>(candidates[c]);
          for (std::int64_t n = 0; n <= horizon; ++n) {
            const auto& w = windows[static_cast<std::size_t>(n)];
            const std::uint16_t* base =
                buffers.ids.data() + (w.lo - buffers.id_lo);
            counts[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(
                kernels::count_eq(base,
                                  static_cast<std::size_t>(w.hi - w.lo + 1),
                                  id));
          }
          PerWord& out = results[c];
          bool first = true;
          for (std::int64_t n = window_lo_index; n <= horizon; ++n) {
            const auto& w = windows[static_cast<std::size_t>(n)];
            Ratio r = make_ratio(counts[static_cast<std::size_t>(n)],
                                 w.hi - w.lo + 1);
            if (first || r > out.upper) out.upper = r;
            if (first || r < out.lower) out.lower = r;
            first = false;
          }
          out.kept = out.upper > tol;
          if (out.kept) out.counts = counts;
        }
      });

  AttractorCover cover;
  cover.resolution = k;
  cover.tolerance = tol;
  cover.horizon = horizon;
  cover.scan_lo = lo;
  cover.scan_hi = hi;
  cover.point_label = x.describe();
  cover.folner_label = f.label();

  // Kept cylinders share the center position, so distinct words give
  // disjoint visit sets and the union counts are plain sums.
  std::vector<std::int64_t> union_counts(static_cast<std::size_t>(horizon + 1),
                                         0);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!results[c].kept) continue;
    AttractorCover::Entry entry{word_of_id(x.alphabet(), k, candidates[c]),
                                results[c].upper, results[c].lower};
    cover.kept.push_back(std::move(entry));
    for (std::int64_t n = 0; n <= horizon; ++n)
      union_counts[static_cast<std::size_t>(n)] +=
          results[c].counts[static_cast<std::size_t>(n)];
  }
  std::sort(cover.kept.begin(), cover.kept.end(),
            [](const AttractorCover::Entry& a, const AttractorCover::Entry& b) {
              return a.word.text() < b.word.text();
            });

  DensityReport& report = cover.union_sojourn;
  report.horizon = horizon;
  report.window_lo = window_lo_index;
  report.folner_label = f.label();
  report.set_description = "union of kept cylinders";
  report.ratios.reserve(static_cast<std::size_t>(horizon + 1));
  for (std::int64_t n = 0; n <= horizon; ++n) {
    const auto& w = windows[static_cast<std::size_t>(n)];
    report.ratios.emplace_back(
        n, make_ratio(union_counts[static_cast<std::size_t>(n)],
                      w.hi - w.lo + 1));
  }
  auto envelope = [&](std::int64_t m) {
    Ratio upper = report.ratios[static_cast<std::size_t>(m)].second;
    Ratio lower = upper;
    for (std::int64_t n = m; n <= horizon; ++n) {
      const Ratio& r = report.ratios[static_cast<std::size_t>(n)].second;
      if (r > upper) upper = r;
      if (r < lower) lower = r;
    }
    return std::make_pair(upper, lower);
  };
  auto [hu, hl] = envelope(window_lo_index);
  report.headline_upper = hu;
  report.headline_lower = hl;
  for (int quarter = 0; quarter < 4; ++quarter) {
    std::int64_t m = (horizon * quarter + 3) / 4;
    auto [wu, wl] = envelope(m);
    report.envelope.push_back({m, wu, wl});
  }
  return cover;
}

std::vector<Word> follower_violations(const AttractorCover& cover,
                                      const SymbolicPoint& x) {
  if (cover.kept.empty()) return {};
  std::int64_t k = cover.resolution;
  std::int64_t length = 2 * k + 1;
  std::map<std::string, bool> satisfied;
  for (const auto& entry : cover.kept) satisfied[entry.word.text()] = false;

  for (std::int64_t g = cover.scan_lo; g < cover.scan_hi; ++g) {
    Word here = window(x, g - k, length);
    auto it = satisfied.find(here.text());
    if (it == satisfied.end() || it->second) continue;
    Word next = window(x, g + 1 - k, length);
    if (satisfied.count(next.text())) it->second = true;
  }

  std::vector<Word> violations;
  for (const auto& entry : cover.kept)
    if (!satisfied[entry.word.text()]) violations.push_back(entry.word);
  return violations;
}

bool cover_in_orbit(const AttractorCover& cover, const SymbolicPoint& x) {
  std::int64_t k = cover.resolution;
  std::int64_t length = 2 * k + 1;
  for (const auto& entry : cover.kept) {
    bool found = false;
    for (std::int64_t m = cover.scan_lo - k;
         m + length - 1 <= cover.scan_hi + k && !found; ++m) {
      bool match = true;
      for (std::int64_t p = 0; p < length && match; ++p)
        match = x.eval(m + p) == entry.word.symbol(p);
      found = match;
    }
    if (!found) return false;
  }
  return true;
}

bool s_generic_probe(const SymbolicPoint& x, const FolnerSequence& f,
                     std::int64_t k, std::int64_t horizon, const Ratio& tol,
                     const Ratio& headline_fraction, std::int64_t threads) {
  AttractorCover cover =
      attractor_cover(x, f, k, horizon, tol, headline_fraction, threads);
  std::string central = window(x, -k, 2 * k + 1).text();
  for (const auto& entry : cover.kept)
    if (entry.word.text() == central) return true;
  return false;
}

bool covers_equal_kept(const AttractorCover& a, const AttractorCover& b) {
  if (a.resolution != b.resolution)
    throw PreconditionError("cover resolutions differ");
  if (a.kept.size() != b.kept.size()) return false;
  for (std::size_t i = 0; i < a.kept.size(); ++i)
    if (!(a.kept[i].word == b.kept[i].word)) return false;
  return true;
}

}  // namespace orbit
