// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbit/shift_space.hpp"

namespace orbit {

// Scan for simultaneous closeness of two orbits. The witness list records
// every strict improvement in scan order 0, 1, -1, 2, -2, ...; the last
// entry realizes the minimum.
struct ProximalScan {
  MetricValue minimum;
  std::vector<std::pair<std::int64_t, MetricValue>> witnesses;
};
ProximalScan proximal_search(const SymbolicPoint& x, const SymbolicPoint& y,
                             std::int64_t horizon, std::int64_t resolution);

// Largest certified distance over the translates with n < |g| <= horizon,
// with the first realizing g in scan order. Staying large as n grows is the
// evidence that the pair is not asymptotic.
struct TailSeparation {
  MetricValue value;
  std::int64_t witness = 0;
};
TailSeparation asymptotic_tail(const SymbolicPoint& x, const SymbolicPoint& y,
                               std::int64_t n, std::int64_t horizon,
                               std::int64_t resolution);

// Combined verdict: close somewhere, certified apart arbitrarily late.
// proximal_threshold_exponent e accepts a minimum <= 2^-e; every tail row
// must certify an exact separation >= 2^-separation_exponent.
struct ChaosVerdict {
  ProximalScan proximal;
  struct TailRow {
    std::int64_t n = 0;
    std::int64_t witness = 0;
    MetricValue value;
  };
  std::vector<TailRow> tail_sup;
  bool liyorke = false;
  std::int64_t horizon = 0;
  std::int64_t resolution = 0;
  std::int64_t proximal_threshold_exponent = 0;
  std::int64_t separation_exponent = 0;
};
ChaosVerdict li_yorke_verdict(const SymbolicPoint& x, const SymbolicPoint& y,
                              std::int64_t horizon, std::int64_t resolution,
                              std::int64_t proximal_threshold_exponent,
                              const std::vector<std::int64_t>& tail_indices,
                              std::int64_t separation_exponent = 0);

// Four greedy witness lists: translates of x approaching y, translates
// certified apart from y, and the same two clauses for the pair translated
// together. Approach lists hold strict improvements; separation lists hold
// the first `count` certified hits at the separation exponent. Any clause
// unrealizable at this horizon leaves its list empty.
struct ChaosPairWitness {
  std::vector<std::pair<std::int64_t, MetricValue>> approach_to_partner;
  std::vector<std::pair<std::int64_t, MetricValue>> apart_from_partner;
  std::vector<std::pair<std::int64_t, MetricValue>> approach_together;
  std::vector<std::pair<std::int64_t, MetricValue>> apart_together;
  // Worst realized separation across the two apart lists, when nonempty.
  std::optional<MetricValue> separation_floor;
};
ChaosPairWitness chaos_pair_witness(const SymbolicPoint& x,
                                    const SymbolicPoint& y,
                                    std::int64_t horizon,
                                    std::int64_t resolution,
                                    std::int64_t count,
                                    std::int64_t separation_exponent = 0);

// Constructive sensitivity: patch one coordinate just outside the matched
// ball and shift it to the origin. The separation is always Exact(1).
struct SensitivityWitness {
  std::int64_t patch_index = 0;
  int patched_symbol = 0;
  std::int64_t g = 0;
  MetricValue closeness;   // metric(x, y, k) before shifting
  MetricValue separation;  // metric at resolution 0 after shifting by g
};
SensitivityWitness sensitivity_probe(const SymbolicPoint& x, std::int64_t k,
                                     std::int64_t epsilon_exponent,
                                     std::int64_t horizon);

// Per visited word: largest gap of its occurrence set on
// [-horizon, horizon], absent when it occurs fewer than two times.
std::map<Word, std::optional<std::int64_t>> almost_periodic_probe(
    const SymbolicPoint& x, std::int64_t k, std::int64_t horizon);

// Orbit-sample approximation of the transfer set from U to V: g qualifies
// when some |h| <= horizon has the orbit in U at h and in V at g+h. Reports
// the largest gap of the approximation on [-horizon/2, horizon/2]; absent
// with fewer than two members. An under-approximation by construction.
std::optional<std::int64_t> ergodicity_probe(const SymbolicPoint& x,
                                             const Cylinder& u,
                                             const Cylinder& v,
                                             std::int64_t horizon);

// Splice search: mutations of the center that the single translate g carries
// into the 2^-k balls of every target at once.
struct TupleWitness {
  bool found = false;
  std::int64_t g = 0;
  // Per target: the patches applied to the center (possibly empty).
  std::vector<std::vector<std::pair<std::int64_t, int>>> patches;
};
struct TupleSensitivityReport {
  TupleWitness unrestricted;
  // Candidates must additionally occur in the center's orbit segment, the
  // finite-horizon stand-in for staying inside the orbit closure.
  TupleWitness restricted;
};
TupleSensitivityReport tuple_sensitivity_witness(
    const SymbolicPoint& center, const std::vector<SymbolicPoint>& targets,
    std::int64_t k, std::int64_t horizon);

}  // namespace orbit
