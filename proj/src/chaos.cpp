// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/chaos.hpp"

#include <algorithm>

#include "orbit/errors.hpp"

namespace orbit {
namespace {

// Scan order 0, 1, -1, 2, -2, ...: ties resolve toward the earliest element,
// keeping every scan deterministic.
template <typename Fn>
void for_each_offset(std::int64_t from, std::int64_t to, Fn&& fn) {
  if (from == 0 && !fn(0)) return;
  std::int64_t start = from > 0 ? from : 1;
  for (std::int64_t g = start; g <= to; ++g) {
    if (!fn(g)) return;
    if (!fn(-g)) return;
  }
}

bool certifies_separation(const MetricValue& d, std::int64_t exponent) {
  return d.is_exact() && d.exponent <= exponent;
}

}  // namespace

ProximalScan proximal_search(const SymbolicPoint& x, const SymbolicPoint& y,
                             std::int64_t horizon, std::int64_t resolution) {
  if (horizon < 1) throw PreconditionError("scan horizon must be >= 1");
  ProximalScan scan;
  bool first = true;
  for_each_offset(0, horizon, [&](std::int64_t g) {
    MetricValue d = metric_at_resolution(x.shifted(g), y.shifted(g),
                                         resolution);
    if (first || metric_less(d, scan.minimum)) {
      scan.minimum = d;
      scan.witnesses.emplace_back(g, d);
      first = false;
    }
    return true;
  });
  return scan;
}

TailSeparation asymptotic_tail(const SymbolicPoint& x, const SymbolicPoint& y,
                               std::int64_t n, std::int64_t horizon,
                               std::int64_t resolution) {
  if (n < 0) throw PreconditionError("tail index must be nonnegative");
  if (n >= horizon)
    throw PreconditionError("tail index must be below the horizon");
  TailSeparation best;
  bool first = true;
  for_each_offset(n + 1, horizon, [&](std::int64_t g) {
    MetricValue d =
        metric_at_resolution(x.shifted(g), y.shifted(g), resolution);
    if (first || metric_less(best.value, d)) {
      best.value = d;
      best.witness = g;
      first = false;
    }
    // Exact(1) is the top of the metric; nothing later can beat it.
    return !(best.value.is_exact() && best.value.exponent == 0);
  });
  return best;
}

ChaosVerdict li_yorke_verdict(const SymbolicPoint& x, const SymbolicPoint& y,
                              std::int64_t horizon, std::int64_t resolution,
                              std::int64_t proximal_threshold_exponent,
                              const std::vector<std::int64_t>& tail_indices,
                              std::int64_t separation_exponent) {
  if (proximal_threshold_exponent < 0 || separation_exponent < 0)
    throw PreconditionError("threshold exponents must be nonnegative");
  ChaosVerdict verdict;
  verdict.horizon = horizon;
  verdict.resolution = resolution;
  verdict.proximal_threshold_exponent = proximal_threshold_exponent;
  verdict.separation_exponent = separation_exponent;
  verdict.proximal = proximal_search(x, y, horizon, resolution);

  bool close_enough =
      verdict.proximal.minimum.exponent >= proximal_threshold_exponent;
  bool apart_always = true;
  for (std::int64_t n : tail_indices) {
    TailSeparation tail = asymptotic_tail(x, y, n, horizon, resolution);
    verdict.tail_sup.push_back({n, tail.witness, tail.value});
    if (!certifies_separation(tail.value, separation_exponent))
      apart_always = false;
  }
  verdict.liyorke = close_enough && !tail_indices.empty() && apart_always;
  return verdict;
}

ChaosPairWitness chaos_pair_witness(const SymbolicPoint& x,
                                    const SymbolicPoint& y,
                                    std::int64_t horizon,
                                    std::int64_t resolution,
                                    std::int64_t count,
                                    std::int64_t separation_exponent) {
  if (horizon < 1) throw PreconditionError("scan horizon must be >= 1");
  if (count < 1) throw PreconditionError("witness count must be >= 1");
  ChaosPairWitness witness;

  auto approach = [&](auto&& distance,
                      std::vector<std::pair<std::int64_t, MetricValue>>& out) {
    MetricValue best;
    bool first = true;
    for_each_offset(0, horizon, [&](std::int64_t g) {
      MetricValue d = distance(g);
      if (first || metric_less(d, best)) {
        best = d;
        out.emplace_back(g, d);
        first = false;
      }
      return true;
    });
  };
  auto apart = [&](auto&& distance,
                   std::vector<std::pair<std::int64_t, MetricValue>>& out) {
    for_each_offset(0, horizon, [&](std::int64_t g) {
      MetricValue d = distance(g);
      if (certifies_separation(d, separation_exponent)) {
        out.emplace_back(g, d);
        if (static_cast<std::int64_t>(out.size()) >= count) return false;
      }
      return true;
    });
  };

  auto toward_partner = [&](std::int64_t g) {
    return metric_at_resolution(x.shifted(g), y, resolution);
  };
  auto together = [&](std::int64_t g) {
    return metric_at_resolution(x.shifted(g), y.shifted(g), resolution);
  };

  approach(toward_partner, witness.approach_to_partner);
  apart(toward_partner, witness.apart_from_partner);
  approach(together, witness.approach_together);
  apart(together, witness.apart_together);

  // An approach list whose best value still certifies a disagreement at
  // radius 0 realizes no approach at all; report it empty.
  auto prune = [](std::vector<std::pair<std::int64_t, MetricValue>>& out) {
    if (!out.empty() && out.back().second.is_exact() &&
        out.back().second.exponent == 0)
      out.clear();
  };
  prune(witness.approach_to_partner);
  prune(witness.approach_together);

  for (const auto* list :
       {&witness.apart_from_partner, &witness.apart_together}) {
    for (const auto& [g, d] : *list) {
      if (!witness.separation_floor ||
          metric_less(d, *witness.separation_floor))
        witness.separation_floor = d;
    }
  }
  return witness;
}

SensitivityWitness sensitivity_probe(const SymbolicPoint& x, std::int64_t k,
                                     std::int64_t epsilon_exponent,
                                     std::int64_t horizon) {
  if (k < 0) throw PreconditionError("resolution must be nonnegative");
  if (epsilon_exponent < 0)
    throw PreconditionError("sensitivity constants above 1 are unrealizable");
  if (horizon <= k)
    throw PreconditionError("no admissible patch index at this horizon");
  std::int64_t j = k + 1;
  int flipped = (x.eval(j) + 1) % x.alphabet().size;
  SymbolicPoint y = mutate_finitely(x, {{j, flipped}});
  SensitivityWitness out;
  out.patch_index = j;
  out.patched_symbol = flipped;
  out.g = j;
  out.closeness = metric_at_resolution(x, y, k);
  out.separation = metric_at_resolution(x.shifted(j), y.shifted(j), 0);
  return out;
}

std::map<Word, std::optional<std::int64_t>> almost_periodic_probe(
    const SymbolicPoint& x, std::int64_t k, std::int64_t horizon) {
  if (k < 0) throw PreconditionError("resolution must be nonnegative");
  if (horizon < 1) throw PreconditionError("scan horizon must be >= 1");
  std::int64_t length = 2 * k + 1;
  std::map<Word, std::optional<std::int64_t>> gaps;
  std::map<Word, std::int64_t> last_seen;
  for (std::int64_t g = -horizon; g <= horizon; ++g) {
    Word w = window(x, g - k, length);
    auto it = last_seen.find(w);
    if (it == last_seen.end()) {
      last_seen.emplace(w, g);
      gaps.emplace(w, std::nullopt);
    } else {
      std::int64_t gap = g - it->second;
      auto& slot = gaps[w];
      if (!slot || gap > *slot) slot = gap;
      it->second = g;
    }
  }
  return gaps;
}

std::optional<std::int64_t> ergodicity_probe(const SymbolicPoint& x,
                                             const Cylinder& u,
                                             const Cylinder& v,
                                             std::int64_t horizon) {
  if (horizon < 1) throw PreconditionError("scan horizon must be >= 1");
  std::int64_t half = horizon / 2;
  // Visits to u for |h| <= horizon, visits to v wherever g+h can land.
  std::vector<std::uint8_t> in_u(static_cast<std::size_t>(2 * horizon + 1));
  for (std::int64_t h = -horizon; h <= horizon; ++h)
    in_u[static_cast<std::size_t>(h + horizon)] =
        in_cylinder(x.shifted(h), u) ? 1 : 0;
  std::int64_t v_lo = -horizon - half;
  std::int64_t v_hi = horizon + half;
  std::vector<std::uint8_t> in_v(static_cast<std::size_t>(v_hi - v_lo + 1));
  for (std::int64_t p = v_lo; p <= v_hi; ++p)
    in_v[static_cast<std::size_t>(p - v_lo)] =
        in_cylinder(x.shifted(p), v) ? 1 : 0;

  std::optional<std::int64_t> prev;
  std::optional<std::int64_t> best;
  for (std::int64_t g = -half; g <= half; ++g) {
    bool member = false;
    for (std::int64_t h = -horizon; h <= horizon && !member; ++h)
      member = in_u[static_cast<std::size_t>(h + horizon)] &&
               in_v[static_cast<std::size_t>(g + h - v_lo)];
    if (!member) continue;
    if (prev) {
      std::int64_t gap = g - *prev;
      best = best ? std::max(*best, gap) : gap;
    }
    prev = g;
  }
  return best;
}

namespace {

// Restricted mode probes a bounded list of splice positions; beyond it the
// witness is reported absent at this horizon rather than searched forever.
constexpr std::int64_t k_restricted_positions = 16;

bool occurs_in_buffer(const std::vector<std::uint8_t>& buffer,
                      const std::vector<std::uint8_t>& pattern) {
  if (pattern.size() > buffer.size()) return false;
  auto it = std::search(buffer.begin(), buffer.end(), pattern.begin(),
                        pattern.end());
  return it != buffer.end();
}

TupleWitness splice_search(const SymbolicPoint& center,
                           const std::vector<SymbolicPoint>& targets,
                           std::int64_t k, std::int64_t horizon,
                           bool restricted) {
  TupleWitness out;
  std::int64_t length = 2 * k + 1;
  Word center_window = window(center, -k, length);

  // g = 0 with no mutation works exactly when every target already shares
  // the center's central window; valid in both modes.
  bool identity = true;
  for (const auto& target : targets)
    identity = identity && window(target, -k, length) == center_window;
  if (identity) {
    out.found = true;
    out.g = 0;
    out.patches.assign(targets.size(), {});
    return out;
  }

  std::vector<std::uint8_t> segment;
  std::int64_t segment_lo = 0;
  if (restricted) {
    // One materialized pass over the center; all occurrence checks run on
    // this buffer. It covers every pattern the probed positions can touch.
    std::int64_t reach = length + k_restricted_positions + k;
    segment_lo = -horizon - reach;
    std::int64_t segment_hi = horizon + reach;
    segment.resize(static_cast<std::size_t>(segment_hi - segment_lo + 1));
    for (std::int64_t i = segment_lo; i <= segment_hi; ++i)
      segment[static_cast<std::size_t>(i - segment_lo)] =
          static_cast<std::uint8_t>(center.eval(i));

    // Necessary condition: each target's window occurs in the segment at
    // all. A miss settles the restricted verdict immediately.
    for (const auto& target : targets) {
      std::vector<std::uint8_t> pattern(
          window(target, -k, length).symbols());
      if (!occurs_in_buffer(segment, pattern)) return out;
    }
  }

  // The splice needs a window disjoint from the central ball.
  auto try_position = [&](std::int64_t g) -> bool {
    std::vector<std::vector<std::pair<std::int64_t, int>>> patches;
    patches.reserve(targets.size());
    for (const auto& target : targets) {
      std::vector<std::pair<std::int64_t, int>> patch;
      for (std::int64_t p = -k; p <= k; ++p) {
        int want = target.eval(p);
        if (center.eval(g + p) != want) patch.emplace_back(g + p, want);
      }
      if (restricted) {
        // The whole modified stretch, central window included, must occur
        // in the center's segment for the candidate to stay inside the
        // orbit-closure evidence.
        std::int64_t lo = std::min<std::int64_t>(-k, g - k);
        std::int64_t hi = std::max<std::int64_t>(k, g + k);
        std::vector<std::uint8_t> pattern;
        pattern.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t i = lo; i <= hi; ++i) {
          int s = segment[static_cast<std::size_t>(i - segment_lo)];
          if (i >= g - k && i <= g + k) s = target.eval(i - g);
          pattern.push_back(static_cast<std::uint8_t>(s));
        }
        if (!occurs_in_buffer(segment, pattern)) return false;
      }
      patches.push_back(std::move(patch));
    }
    out.found = true;
    out.g = g;
    out.patches = std::move(patches);
    return true;
  };

  std::int64_t last = horizon;
  if (restricted)
    last = std::min(horizon, length + k_restricted_positions - 1);
  for (std::int64_t step = length; step <= last; ++step) {
    if (try_position(step)) return out;
    if (try_position(-step)) return out;
  }
  return out;
}

}  // namespace

TupleSensitivityReport tuple_sensitivity_witness(
    const SymbolicPoint& center, const std::vector<SymbolicPoint>& targets,
    std::int64_t k, std::int64_t horizon) {
  if (targets.empty()) throw PreconditionError("tuple search needs targets");
  if (targets.size() > 5)
    throw PreconditionError("tuple search supports at most five targets");
  if (k < 0) throw PreconditionError("resolution must be nonnegative");
  if (horizon < 1) throw PreconditionError("scan horizon must be >= 1");
  for (const auto& target : targets)
    if (target.alphabet() != center.alphabet())
      throw PreconditionError("tuple targets must share the alphabet");

  TupleSensitivityReport report;
  report.unrestricted = splice_search(center, targets, k, horizon, false);
  report.restricted = splice_search(center, targets, k, horizon, true);
  return report;
}

}  // namespace orbit
