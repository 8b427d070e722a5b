// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "json.hpp"
#include "orbit/attraction.hpp"
#include "orbit/chaos.hpp"
#include "orbit/density.hpp"
#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/shift_space.hpp"

namespace orbit {

using Json = nlohmann::ordered_json;

// Closed-form expression strings in the index variable: integer constants,
// n, +, -, *, parentheses, and base^n with a constant base. "10^n+10*n-1".
IndexExpr parse_index_expr(const std::string& text);

// Specification documents. Each parser accepts a structured JSON record or
// a named shorthand string; see the README for the grammar. Errors carry
// the offending field path.
IntegerSet parse_set_doc(const Json& doc);
SymbolicPoint parse_point_doc(const Json& doc);
FolnerSequence parse_folner_doc(const Json& doc);

// Inline JSON text or a shorthand name; used by the CLI flags.
IntegerSet parse_set_text(const std::string& text);
SymbolicPoint parse_point_text(const std::string& text);
FolnerSequence parse_folner_text(const std::string& text);

std::string metric_text(const MetricValue& value);
MetricValue parse_metric_text(const std::string& text);

Json density_to_json(const DensityReport& report);
DensityReport density_from_json(const Json& doc);
Json cover_to_json(const AttractorCover& cover);
Json verdict_to_json(const ChaosVerdict& verdict);
Json pair_witness_to_json(const ChaosPairWitness& witness);
Json tuple_report_to_json(const TupleSensitivityReport& report);

std::string density_to_tsv(const DensityReport& report);
std::string cover_to_tsv(const AttractorCover& cover);

}  // namespace orbit
