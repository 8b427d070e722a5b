// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include "orbit/spec_doc.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "orbit/errors.hpp"

namespace orbit {
namespace {

// ---- index expression mini parser -------------------------------------

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }
  bool take(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("expression '" + text + "'",
                     what + " at offset " + std::to_string(pos));
  }

  BigInt integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(text.substr(start, pos - start));
  }

  IndexExpr factor() {
    skip_space();
    if (take('(')) {
      IndexExpr inner = expr();
      if (!take(')')) fail("expected ')'");
      return inner;
    }
    if (take('-')) return IndexExpr::constant(BigInt(0)) - factor();
    if (pos < text.size() && (text[pos] == 'n' || text[pos] == 'N')) {
      ++pos;
      return IndexExpr::variable();
    }
    BigInt value = integer();
    skip_space();
    if (take('^')) {
      skip_space();
      if (pos >= text.size() || (text[pos] != 'n' && text[pos] != 'N'))
        fail("exponent must be the index variable");
      ++pos;
      if (value < 2) fail("power base must be at least 2");
      return IndexExpr::power(value);
    }
    return IndexExpr::constant(value);
  }

  IndexExpr term() {
    IndexExpr left = factor();
    while (take('*')) left = left * factor();
    return left;
  }

  IndexExpr expr() {
    IndexExpr left = term();
    for (;;) {
      if (take('+'))
        left = left + term();
      else if (take('-'))
        left = left - term();
      else
        return left;
    }
  }
};

// ---- shared JSON helpers -----------------------------------------------

[[noreturn]] void doc_fail(const std::string& where, const std::string& what) {
  throw ParseError(where, what);
}

const Json& need_field(const Json& doc, const char* key,
                       const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) doc_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t need_int(const Json& doc, const char* key,
                      const std::string& where) {
  const Json& field = need_field(doc, key, where);
  if (!field.is_number_integer())
    doc_fail(where + "." + key, "expected an integer");
  return field.get<std::int64_t>();
}

std::string need_string(const Json& doc, const char* key,
                        const std::string& where) {
  const Json& field = need_field(doc, key, where);
  if (!field.is_string()) doc_fail(where + "." + key, "expected a string");
  return field.get<std::string>();
}

Json parse_json_text(const std::string& text, const std::string& where) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) doc_fail(where, "malformed JSON");
  return doc;
}

IntegerSet parse_set_doc_at(const Json& doc, const std::string& where);

IntegerSet named_set(const std::string& name, const std::string& where) {
  if (name == "decade_a") return thick_triple().a;
  if (name == "decade_b") return thick_triple().b;
  if (name == "decade_c") return thick_triple().c;
  if (name == "block_support") return block_support();
  doc_fail(where, "unknown set name '" + name + "'");
}

IntegerSet parse_set_doc_at(const Json& doc, const std::string& where) {
  if (doc.is_string()) return named_set(doc.get<std::string>(), where);
  if (!doc.is_object()) doc_fail(where, "expected an object or a set name");
  std::string type = need_string(doc, "type", where);
  if (type == "finite") {
    const Json& elems = need_field(doc, "elements", where);
    if (!elems.is_array()) doc_fail(where + ".elements", "expected an array");
    std::vector<std::int64_t> items;
    for (const Json& e : elems) {
      if (!e.is_number_integer())
        doc_fail(where + ".elements", "expected integers");
      items.push_back(e.get<std::int64_t>());
    }
    return IntegerSet::finite(std::move(items));
  }
  if (type == "progression")
    return IntegerSet::progression(need_int(doc, "modulus", where),
                                   need_int(doc, "residue", where));
  if (type == "blocks") {
    IndexExpr start = parse_index_expr(need_string(doc, "start", where));
    IndexExpr end = parse_index_expr(need_string(doc, "end", where));
    std::int64_t first = doc.contains("first_index")
                             ? need_int(doc, "first_index", where)
                             : 0;
    return IntegerSet::interval_family(std::move(start), std::move(end),
                                       first);
  }
  if (type == "union" || type == "intersection") {
    const Json& parts = need_field(doc, "parts", where);
    if (!parts.is_array() || parts.empty())
      doc_fail(where + ".parts", "expected a nonempty array");
    std::vector<IntegerSet> sets;
    std::size_t index = 0;
    for (const Json& part : parts) {
      sets.push_back(parse_set_doc_at(
          part, where + ".parts[" + std::to_string(index) + "]"));
      ++index;
    }
    return type == "union" ? IntegerSet::union_of(std::move(sets))
                           : IntegerSet::intersection_of(std::move(sets));
  }
  if (type == "complement")
    return parse_set_doc_at(need_field(doc, "of", where), where + ".of")
        .complemented();
  if (type == "translate")
    return parse_set_doc_at(need_field(doc, "of", where), where + ".of")
        .translated(need_int(doc, "g", where));
  if (type == "negate")
    return parse_set_doc_at(need_field(doc, "of", where), where + ".of")
        .negated();
  if (type == "named") return named_set(need_string(doc, "name", where), where);
  doc_fail(where + ".type", "unknown set type '" + type + "'");
}

SymbolicPoint parse_point_doc_at(const Json& doc, const std::string& where) {
  if (doc.is_string()) {
    std::string name = doc.get<std::string>();
    if (name == "alternating_blocks") return alternating_block_point();
    if (name == "word_stream") return word_stream_point();
    if (name == "block_indicator") return make_indicator(block_support());
    if (name == "zeros")
      return make_periodic(Word::from_text(Alphabet(2), "0"), 0);
    if (name == "ones")
      return make_periodic(Word::from_text(Alphabet(2), "1"), 0);
    doc_fail(where, "unknown point name '" + name + "'");
  }
  if (!doc.is_object()) doc_fail(where, "expected an object or a point name");
  std::string type = need_string(doc, "type", where);
  if (type == "periodic") {
    std::string text = need_string(doc, "word", where);
    std::int64_t phase =
        doc.contains("phase") ? need_int(doc, "phase", where) : 0;
    int size = 2;
    for (char c : text) size = std::max(size, c - '0' + 1);
    return make_periodic(Word::from_text(Alphabet(size), text), phase);
  }
  if (type == "indicator")
    return make_indicator(
        parse_set_doc_at(need_field(doc, "set", where), where + ".set"));
  if (type == "alternating_blocks") return alternating_block_point();
  if (type == "word_stream") return word_stream_point();
  if (type == "mutation") {
    SymbolicPoint base =
        parse_point_doc_at(need_field(doc, "base", where), where + ".base");
    const Json& patches = need_field(doc, "patches", where);
    if (!patches.is_array()) doc_fail(where + ".patches", "expected an array");
    std::vector<std::pair<std::int64_t, int>> list;
    for (const Json& patch : patches) {
      if (!patch.is_array() || patch.size() != 2 ||
          !patch[0].is_number_integer() || !patch[1].is_number_integer())
        doc_fail(where + ".patches", "expected [index, symbol] pairs");
      list.emplace_back(patch[0].get<std::int64_t>(), patch[1].get<int>());
    }
    return mutate_finitely(base, list);
  }
  if (type == "shift") {
    SymbolicPoint base =
        parse_point_doc_at(need_field(doc, "base", where), where + ".base");
    return base.shifted(need_int(doc, "g", where));
  }
  doc_fail(where + ".type", "unknown point type '" + type + "'");
}

FolnerSequence parse_folner_doc_at(const Json& doc, const std::string& where) {
  if (doc.is_string()) {
    std::string name = doc.get<std::string>();
    if (name == "standard") return FolnerSequence::standard();
    if (name == "block_form") return FolnerSequence::block_form();
    if (name == "gap_form") return FolnerSequence::gap_form();
    doc_fail(where, "unknown sequence name '" + name + "'");
  }
  if (!doc.is_object())
    doc_fail(where, "expected an object or a sequence name");
  std::string type = need_string(doc, "type", where);
  if (type == "standard") return FolnerSequence::standard();
  if (type == "block_form") return FolnerSequence::block_form();
  if (type == "gap_form") return FolnerSequence::gap_form();
  if (type == "translate") {
    FolnerSequence base =
        parse_folner_doc_at(need_field(doc, "base", where), where + ".base");
    return base.translated(need_int(doc, "g", where));
  }
  doc_fail(where + ".type", "unknown sequence type '" + type + "'");
}

}  // namespace

IndexExpr parse_index_expr(const std::string& text) {
  ExprParser parser(text);
  IndexExpr result = parser.expr();
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing characters");
  return result;
}

IntegerSet parse_set_doc(const Json& doc) { return parse_set_doc_at(doc, "set"); }
SymbolicPoint parse_point_doc(const Json& doc) {
  return parse_point_doc_at(doc, "point");
}
FolnerSequence parse_folner_doc(const Json& doc) {
  return parse_folner_doc_at(doc, "folner");
}

namespace {

// Inline specs: JSON when the text looks like JSON, else a shorthand name.
Json inline_doc(const std::string& text, const std::string& where) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (text[first] == '{' || text[first] == '[' || text[first] == '"'))
    return parse_json_text(text, where);
  return Json(text);
}

}  // namespace

IntegerSet parse_set_text(const std::string& text) {
  return parse_set_doc(inline_doc(text, "set"));
}
SymbolicPoint parse_point_text(const std::string& text) {
  return parse_point_doc(inline_doc(text, "point"));
}
FolnerSequence parse_folner_text(const std::string& text) {
  return parse_folner_doc(inline_doc(text, "folner"));
}

std::string metric_text(const MetricValue& value) { return value.text(); }

MetricValue parse_metric_text(const std::string& text) {
  std::string body = text;
  bool upper = false;
  if (body.rfind("<=", 0) == 0) {
    upper = true;
    body = body.substr(2);
  }
  std::int64_t exponent = 0;
  if (body == "1") {
    exponent = 0;
  } else if (body.rfind("2^-", 0) == 0) {
    try {
      exponent = std::stoll(body.substr(3));
    } catch (const std::exception&) {
      throw ParseError("metric", "bad exponent in '" + text + "'");
    }
  } else {
    throw ParseError("metric", "expected '1' or '2^-k', got '" + text + "'");
  }
  return upper ? MetricValue::upper(exponent) : MetricValue::exact_at(exponent);
}

Json density_to_json(const DensityReport& report) {
  Json doc;
  doc["folner"] = report.folner_label;
  doc["set"] = report.set_description;
  doc["horizon"] = report.horizon;
  doc["headline_window"] = Json::array({report.window_lo, report.horizon});
  doc["headline_upper"] = to_fraction(report.headline_upper);
  doc["headline_lower"] = to_fraction(report.headline_lower);
  Json envelope = Json::array();
  for (const auto& row : report.envelope)
    envelope.push_back(Json::array(
        {row.m, to_fraction(row.upper), to_fraction(row.lower)}));
  doc["envelope"] = std::move(envelope);
  Json ratios = Json::array();
  for (const auto& [n, r] : report.ratios)
    ratios.push_back(Json::array({n, to_fraction(r)}));
  doc["ratios"] = std::move(ratios);
  return doc;
}

DensityReport density_from_json(const Json& doc) {
  const std::string where = "density_report";
  DensityReport report;
  report.folner_label = need_string(doc, "folner", where);
  report.set_description = need_string(doc, "set", where);
  report.horizon = need_int(doc, "horizon", where);
  const Json& window = need_field(doc, "headline_window", where);
  if (!window.is_array() || window.size() != 2)
    doc_fail(where + ".headline_window", "expected [lo, hi]");
  report.window_lo = window[0].get<std::int64_t>();
  report.headline_upper =
      parse_fraction(need_string(doc, "headline_upper", where));
  report.headline_lower =
      parse_fraction(need_string(doc, "headline_lower", where));
  for (const Json& row : need_field(doc, "envelope", where)) {
    if (!row.is_array() || row.size() != 3)
      doc_fail(where + ".envelope", "expected [m, upper, lower] rows");
    DensityReport::EnvelopeRow out;
    out.m = row[0].get<std::int64_t>();
    out.upper = parse_fraction(row[1].get<std::string>());
    out.lower = parse_fraction(row[2].get<std::string>());
    report.envelope.push_back(std::move(out));
  }
  for (const Json& row : need_field(doc, "ratios", where)) {
    if (!row.is_array() || row.size() != 2)
      doc_fail(where + ".ratios", "expected [n, ratio] rows");
    report.ratios.emplace_back(row[0].get<std::int64_t>(),
                               parse_fraction(row[1].get<std::string>()));
  }
  return report;
}

Json cover_to_json(const AttractorCover& cover) {
  Json doc;
  doc["k"] = cover.resolution;
  doc["tol"] = to_fraction(cover.tolerance);
  doc["horizon"] = cover.horizon;
  doc["point"] = cover.point_label;
  doc["folner"] = cover.folner_label;
  doc["scan_range"] = Json::array({cover.scan_lo, cover.scan_hi});
  Json kept = Json::array();
  for (const auto& entry : cover.kept) {
    Json row;
    row["word"] = entry.word.text();
    row["upper"] = to_fraction(entry.upper);
    row["lower"] = to_fraction(entry.lower);
    kept.push_back(std::move(row));
  }
  doc["kept"] = std::move(kept);
  doc["union_sojourn"] = density_to_json(cover.union_sojourn);
  return doc;
}

namespace {

Json witness_list_to_json(
    const std::vector<std::pair<std::int64_t, MetricValue>>& list) {
  Json out = Json::array();
  for (const auto& [g, d] : list)
    out.push_back(Json::array({g, metric_text(d)}));
  return out;
}

}  // namespace

Json verdict_to_json(const ChaosVerdict& verdict) {
  Json doc;
  doc["horizon"] = verdict.horizon;
  doc["resolution"] = verdict.resolution;
  doc["proximal_threshold"] =
      MetricValue::exact_at(verdict.proximal_threshold_exponent).text();
  doc["separation_bound"] =
      MetricValue::exact_at(verdict.separation_exponent).text();
  doc["liyorke"] = verdict.liyorke;
  Json proximal;
  proximal["min"] = metric_text(verdict.proximal.minimum);
  proximal["witnesses"] = witness_list_to_json(verdict.proximal.witnesses);
  doc["proximal"] = std::move(proximal);
  Json tails = Json::array();
  for (const auto& row : verdict.tail_sup) {
    Json out;
    out["n"] = row.n;
    out["witness"] = row.witness;
    out["value"] = metric_text(row.value);
    tails.push_back(std::move(out));
  }
  doc["tail_sup"] = std::move(tails);
  return doc;
}

Json pair_witness_to_json(const ChaosPairWitness& witness) {
  Json doc;
  doc["approach_to_partner"] =
      witness_list_to_json(witness.approach_to_partner);
  doc["apart_from_partner"] = witness_list_to_json(witness.apart_from_partner);
  doc["approach_together"] = witness_list_to_json(witness.approach_together);
  doc["apart_together"] = witness_list_to_json(witness.apart_together);
  doc["separation_floor"] = witness.separation_floor
                                ? Json(metric_text(*witness.separation_floor))
                                : Json(nullptr);
  return doc;
}

Json tuple_report_to_json(const TupleSensitivityReport& report) {
  auto witness_json = [](const TupleWitness& witness) {
    Json doc;
    doc["found"] = witness.found;
    if (witness.found) {
      doc["g"] = witness.g;
      Json per_target = Json::array();
      for (const auto& patch : witness.patches) {
        Json list = Json::array();
        for (const auto& [index, symbol] : patch)
          list.push_back(Json::array({index, symbol}));
        per_target.push_back(std::move(list));
      }
      doc["patches"] = std::move(per_target);
    }
    return doc;
  };
  Json doc;
  doc["unrestricted"] = witness_json(report.unrestricted);
  doc["restricted"] = witness_json(report.restricted);
  return doc;
}

std::string density_to_tsv(const DensityReport& report) {
  std::ostringstream os;
  os << "n\tratio\tdecimal_approx\n";
  for (const auto& [n, r] : report.ratios)
    os << n << "\t" << to_fraction(r) << "\t" << to_decimal6(r) << "\n";
  return os.str();
}

std::string cover_to_tsv(const AttractorCover& cover) {
  std::ostringstream os;
  os << "word\tupper\tupper_decimal\tlower\tlower_decimal\n";
  for (const auto& entry : cover.kept)
    os << entry.word.text() << "\t" << to_fraction(entry.upper) << "\t"
       << to_decimal6(entry.upper) << "\t" << to_fraction(entry.lower) << "\t"
       << to_decimal6(entry.lower) << "\n";
  return os.str();
}

}  // namespace orbit
