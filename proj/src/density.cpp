// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/density.hpp"

#include <algorithm>
#include <utility>

#include "orbit/errors.hpp"
#include "orbit/kernels.hpp"
#include "orbit/parallel.hpp"

namespace orbit {
namespace {

std::int64_t window_count(const IntegerSet& a, std::int64_t lo,
                          std::int64_t hi) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(hi - lo + 1));
  a.fill_mask(lo, hi, mask.data());
  return static_cast<std::int64_t>(
      kernels::count_eq(mask.data(), mask.size(), 1));
}

// Headline window start: ceil((1 - fraction) * horizon), computed exactly.
std::int64_t headline_start(std::int64_t horizon, const Ratio& fraction) {
  if (fraction <= 0 || fraction > 1)
    throw PreconditionError("headline fraction must be in (0, 1]");
  Ratio scaled = (Ratio(1) - fraction) * horizon;
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  BigInt q = num / den;
  if (q * den < num) q += 1;  // ceil for the nonnegative value
  return static_cast<std::int64_t>(q);
}

DensityReport assemble_report(std::vector<std::pair<std::int64_t, Ratio>> ratios,
                              std::int64_t horizon, const Ratio& fraction,
                              std::string folner_label,
                              std::string set_description) {
  DensityReport report;
  report.ratios = std::move(ratios);
  report.horizon = horizon;
  report.window_lo = headline_start(horizon, fraction);
  report.folner_label = std::move(folner_label);
  report.set_description = std::move(set_description);

  auto window_envelope = [&](std::int64_t m) {
    Ratio upper = report.ratios[static_cast<std::size_t>(m)].second;
    Ratio lower = upper;
    for (std::int64_t n = m; n <= horizon; ++n) {
      const Ratio& r = report.ratios[static_cast<std::size_t>(n)].second;
      if (r > upper) upper = r;
      if (r < lower) lower = r;
    }
    return std::make_pair(upper, lower);
  };

  auto [upper, lower] = window_envelope(report.window_lo);
  report.headline_upper = upper;
  report.headline_lower = lower;

  for (int quarter = 0; quarter < 4; ++quarter) {
    std::int64_t m = (horizon * quarter + 3) / 4;  // ceil(horizon*quarter/4)
    DensityReport::EnvelopeRow row;
    row.m = m;
    auto [wu, wl] = window_envelope(m);
    row.upper = wu;
    row.lower = wl;
    report.envelope.push_back(std::move(row));
  }
  return report;
}

}  // namespace

Ratio count_ratio(const IntegerSet& a, const FolnerSequence& f,
                  std::int64_t n) {
  FolnerSequence::Interval window = f.interval(n);
  std::int64_t count = window_count(a, window.lo, window.hi);
  return make_ratio(count, window.hi - window.lo + 1);
}

DensityReport density_report(const IntegerSet& a, const FolnerSequence& f,
                             std::int64_t horizon,
                             const Ratio& headline_fraction,
                             std::int64_t threads) {
  if (horizon < 1) throw PreconditionError("density horizon must be >= 1");
  std::vector<std::pair<std::int64_t, Ratio>> ratios(
      static_cast<std::size_t>(horizon + 1));
  run_chunked(static_cast<std::size_t>(horizon + 1),
              resolve_thread_count(threads),
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t k = begin; k < end; ++k) {
                  std::int64_t n = static_cast<std::int64_t>(k);
                  ratios[k] = {n, count_ratio(a, f, n)};
                }
              });
  return assemble_report(std::move(ratios), horizon, headline_fraction,
                         f.label(), a.describe());
}

std::vector<std::int64_t> achieving_subsequence(const IntegerSet& a,
                                                const FolnerSequence& f,
                                                std::int64_t horizon,
                                                const Ratio& epsilon) {
  if (horizon < 1) throw PreconditionError("density horizon must be >= 1");
  if (epsilon < 0) throw PreconditionError("epsilon must be nonnegative");
  std::vector<Ratio> ratios;
  ratios.reserve(static_cast<std::size_t>(horizon + 1));
  for (std::int64_t n = 0; n <= horizon; ++n)
    ratios.push_back(count_ratio(a, f, n));
  // The cutoff is the limsup estimate, the default headline-window maximum,
  // so early transient spikes neither mask the tail nor join the output
  // unless they clear it.
  const std::int64_t window_lo = headline_start(horizon, make_ratio(1, 2));
  Ratio best = ratios[static_cast<std::size_t>(window_lo)];
  for (std::int64_t n = window_lo; n <= horizon; ++n)
    best = std::max(best, ratios[static_cast<std::size_t>(n)]);
  Ratio cut = best - epsilon;
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= horizon; ++n)
    if (ratios[static_cast<std::size_t>(n)] >= cut) out.push_back(n);
  return out;
}

IntegerSet visit_set(const SymbolicPoint& x, const Cylinder& c) {
  if (x.alphabet() != c.word.alphabet())
    throw PreconditionError("cylinder alphabet does not match the point");
  SymbolicPoint probe = x;
  Cylinder cyl = c;
  auto member = [probe, cyl](std::int64_t g) {
    for (std::int64_t p = 0; p < cyl.word.size(); ++p)
      if (probe.eval(g + cyl.position + p) != cyl.word.symbol(p)) return false;
    return true;
  };
  return IntegerSet::predicate(
      member, "visits(" + cyl.word.text() + "@" +
                  std::to_string(cyl.position) + " in " + probe.describe() +
                  ")");
}

DensityReport sojourn(const SymbolicPoint& x,
                      const std::vector<Cylinder>& region,
                      const FolnerSequence& f, std::int64_t horizon,
                      const Ratio& headline_fraction, std::int64_t threads) {
  if (region.empty()) throw PreconditionError("sojourn region is empty");
  std::vector<IntegerSet> visits;
  visits.reserve(region.size());
  for (const Cylinder& c : region) visits.push_back(visit_set(x, c));
  IntegerSet joined = IntegerSet::union_of(std::move(visits));
  return density_report(joined, f, horizon, headline_fraction, threads);
}

}  // namespace orbit
