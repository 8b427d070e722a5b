// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbit/attraction.hpp"
#include "orbit/chaos.hpp"
#include "orbit/density.hpp"
#include "orbit/errors.hpp"
#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/kernels.hpp"
#include "orbit/parallel.hpp"
#include "orbit/ratio.hpp"
#include "orbit/shift_space.hpp"
#include "orbit/spec_doc.hpp"
#include "orbit/verify.hpp"

namespace {

using orbit::Json;
using orbit::Ratio;

struct CommonOptions {
  std::int64_t threads = 0;  // 0: ORBITDENSITY_THREADS, else 1
  std::string format = "json";
  std::string out_path;
};

// Inline spec text or a path to a file holding it.
std::string load_spec(const std::string& text) {
  if (!text.empty() && text[0] != '{' && text[0] != '"') {
    std::ifstream in(text);
    if (in.good()) {
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }
  }
  return text;
}

void emit(const CommonOptions& common, const std::string& payload) {
  if (common.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(common.out_path, std::ios::binary);
  if (!out)
    throw orbit::PreconditionError("cannot open output path " +
                                   common.out_path);
  out << payload;
}

Ratio parse_ratio_flag(const std::string& text, const char* flag) {
  try {
    if (text.find('/') != std::string::npos)
      return orbit::parse_fraction(text);
    // Decimal convenience: up to six places, converted exactly.
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Ratio(orbit::BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t places = text.size() - dot - 1;
    if (places > 9) throw orbit::ParseError(flag, "too many decimal places");
    orbit::BigInt den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Ratio(orbit::BigInt(digits), den);
  } catch (const orbit::ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw orbit::ParseError(flag, "expected p/q or a decimal, got '" + text +
                                      "'");
  }
}

orbit::Cylinder parse_cylinder_flag(const std::string& text) {
  std::size_t at = text.find('@');
  std::string word = at == std::string::npos ? text : text.substr(0, at);
  std::int64_t position = 0;
  if (at != std::string::npos) {
    try {
      position = std::stoll(text.substr(at + 1));
    } catch (const std::exception&) {
      throw orbit::ParseError("cylinder",
                              "bad position in '" + text + "'");
    }
  }
  int size = 2;
  for (char c : word) size = std::max(size, c - '0' + 1);
  return orbit::Cylinder{
      orbit::Word::from_text(orbit::Alphabet(size), word), position};
}

std::vector<std::int64_t> parse_index_list(const std::string& text,
                                           const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw orbit::ParseError(flag, "bad index '" + item + "'");
    }
  }
  if (out.empty()) throw orbit::ParseError(flag, "empty index list");
  return out;
}

std::string render(const CommonOptions& common, const Json& doc,
                   const std::string& tsv) {
  if (common.format == "tsv") return tsv;
  return doc.dump(2) + "\n";
}

int run_density(const CommonOptions& common, const std::string& set_text,
                const std::string& point_text,
                const std::vector<std::string>& cylinder_texts,
                const std::string& folner_text, std::int64_t horizon,
                const std::string& fraction_text) {
  orbit::FolnerSequence folner =
      orbit::parse_folner_text(load_spec(folner_text));
  Ratio fraction = parse_ratio_flag(fraction_text, "--fraction");
  orbit::DensityReport report;
  if (!point_text.empty()) {
    if (cylinder_texts.empty())
      throw orbit::ParseError("cylinder",
                              "point mode needs at least one --cylinder");
    orbit::SymbolicPoint x = orbit::parse_point_text(load_spec(point_text));
    std::vector<orbit::Cylinder> region;
    for (const std::string& text : cylinder_texts)
      region.push_back(parse_cylinder_flag(text));
    report = orbit::sojourn(x, region, folner, horizon, fraction,
                            common.threads);
  } else {
    if (set_text.empty())
      throw orbit::ParseError("set", "need --set or --point");
    orbit::IntegerSet set = orbit::parse_set_text(load_spec(set_text));
    report =
        orbit::density_report(set, folner, horizon, fraction, common.threads);
  }
  emit(common, render(common, orbit::density_to_json(report),
                      orbit::density_to_tsv(report)));
  return 0;
}

int run_coa(const CommonOptions& common, const std::string& point_text,
            const std::string& folner_text, std::int64_t k,
            std::int64_t horizon, const std::string& tol_text,
            const std::string& fraction_text) {
  orbit::SymbolicPoint x = orbit::parse_point_text(load_spec(point_text));
  orbit::FolnerSequence folner =
      orbit::parse_folner_text(load_spec(folner_text));
  Ratio tol = parse_ratio_flag(tol_text, "--tol");
  Ratio fraction = parse_ratio_flag(fraction_text, "--fraction");
  orbit::AttractorCover cover = orbit::attractor_cover(
      x, folner, k, horizon, tol, fraction, common.threads);

  Json doc = orbit::cover_to_json(cover);
  std::vector<orbit::Word> violations = orbit::follower_violations(cover, x);
  Json violation_list = Json::array();
  for (const auto& word : violations) violation_list.push_back(word.text());
  doc["follower_violations"] = std::move(violation_list);
  doc["kept_words_occur_in_orbit"] = orbit::cover_in_orbit(cover, x);
  std::string central = orbit::window(x, -k, 2 * k + 1).text();
  bool generic = false;
  for (const auto& entry : cover.kept)
    generic = generic || entry.word.text() == central;
  doc["central_window"] = central;
  doc["central_window_kept"] = generic;

  emit(common, render(common, doc, orbit::cover_to_tsv(cover)));
  return 0;
}

int run_setclass(const CommonOptions& common, const std::string& set_text,
                 bool triple_mode, std::int64_t lo, std::int64_t hi,
                 std::int64_t run_length) {
  if (lo > hi)
    throw orbit::PreconditionError("setclass range is empty");
  auto table_for = [&](const orbit::IntegerSet& set) {
    Json rows = Json::array();
    for (std::int64_t h : {lo + (hi - lo) / 100, lo + (hi - lo) / 10, hi}) {
      if (h <= lo) continue;
      Json row;
      row["hi"] = h;
      auto gap = orbit::max_gap(set, lo, h);
      row["max_gap"] = gap ? Json(*gap) : Json(nullptr);
      std::int64_t run = orbit::max_run(set, lo, h);
      row["max_run"] = run;
      if (gap) {
        auto witness =
            orbit::pw_syndetic_witness(set, *gap, (h - lo) / 2 + 1, lo, h);
        row["pw_witness"] =
            witness ? Json::array({witness->start, witness->length})
                    : Json(nullptr);
      } else {
        row["pw_witness"] = nullptr;
      }
      auto thick_gaps = orbit::thickly_syndetic_gaps(set, run_length, lo, h);
      row["run_start_gap"] = thick_gaps ? Json(*thick_gaps) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    return rows;
  };

  Json doc;
  if (triple_mode) {
    orbit::ThickTriple triple = orbit::thick_triple();
    doc["a"] = table_for(triple.a);
    doc["b"] = table_for(triple.b);
    doc["c"] = table_for(triple.c);
    orbit::IntegerSet abc =
        orbit::IntegerSet::intersection_of({triple.a, triple.b, triple.c});
    doc["triple_empty"] = orbit::max_run(abc, std::max<std::int64_t>(lo, 1),
                                         hi) == 0;
  } else {
    if (set_text.empty())
      throw orbit::ParseError("set", "need --set or --triple");
    orbit::IntegerSet set = orbit::parse_set_text(load_spec(set_text));
    doc["set"] = set.describe();
    doc["table"] = table_for(set);
  }

  std::ostringstream tsv;
  tsv << "section\thi\tmax_gap\tmax_run\n";
  auto tsv_rows = [&](const char* name, const Json& rows) {
    for (const auto& row : rows)
      tsv << name << "\t" << row["hi"] << "\t"
          << (row["max_gap"].is_null() ? std::string("absent")
                                       : row["max_gap"].dump())
          << "\t" << row["max_run"] << "\n";
  };
  if (triple_mode) {
    tsv_rows("a", doc["a"]);
    tsv_rows("b", doc["b"]);
    tsv_rows("c", doc["c"]);
  } else {
    tsv_rows("set", doc["table"]);
  }
  emit(common, render(common, doc, tsv.str()));
  return 0;
}

int run_chaos(const CommonOptions& common, const std::string& x_text,
              const std::string& y_text, std::int64_t horizon,
              std::int64_t resolution, std::int64_t threshold_exponent,
              std::int64_t separation_exponent, const std::string& tails_text,
              bool fchaotic, std::int64_t witness_count, bool tuple_mode,
              const std::vector<std::string>& target_texts, std::int64_t k) {
  orbit::SymbolicPoint x = orbit::parse_point_text(load_spec(x_text));
  Json doc;
  if (tuple_mode) {
    if (target_texts.empty())
      throw orbit::ParseError("target", "tuple mode needs --target");
    std::vector<orbit::SymbolicPoint> targets;
    for (const std::string& text : target_texts)
      targets.push_back(orbit::parse_point_text(load_spec(text)));
    orbit::TupleSensitivityReport report =
        orbit::tuple_sensitivity_witness(x, targets, k, horizon);
    doc = orbit::tuple_report_to_json(report);
  } else {
    if (y_text.empty()) throw orbit::ParseError("y", "need --y");
    orbit::SymbolicPoint y = orbit::parse_point_text(load_spec(y_text));
    std::vector<std::int64_t> tails = parse_index_list(tails_text, "--tails");
    orbit::ChaosVerdict verdict =
        orbit::li_yorke_verdict(x, y, horizon, resolution, threshold_exponent,
                                tails, separation_exponent);
    doc = orbit::verdict_to_json(verdict);
    if (fchaotic) {
      orbit::ChaosPairWitness witness = orbit::chaos_pair_witness(
          x, y, horizon, resolution, witness_count, separation_exponent);
      doc["pair_witness"] = orbit::pair_witness_to_json(witness);
    }
  }
  // Chaos reports have no tabular form; TSV requests fall back to JSON.
  emit(common, doc.dump(2) + "\n");
  return 0;
}

int run_example(const CommonOptions& common, const std::string& id) {
  std::vector<orbit::CheckLine> lines =
      orbit::verify_example(id, common.threads);
  std::string payload;
  if (common.format == "json") {
    Json doc = Json::array();
    for (const auto& line : lines) {
      Json row;
      row["label"] = line.label;
      row["pass"] = line.pass;
      row["evidence"] = line.evidence;
      doc.push_back(std::move(row));
    }
    payload = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& line : lines)
      os << (line.pass ? "PASS" : "FAIL") << ": " << line.label << " ("
         << line.evidence << ")\n";
    payload = os.str();
  }
  emit(common, payload);
  return orbit::all_passed(lines) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit density and attractor analysis for the integer shift"};
  app.require_subcommand(1);
  // Common options may trail the subcommand; unmatched args climb back up.
  app.fallthrough();

  CommonOptions common;
  app.add_option("--threads", common.threads,
                 "worker threads (0: ORBITDENSITY_THREADS or 1)");
  app.add_option("--format", common.format, "output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", common.out_path, "write the report to this path");

  // density
  std::string set_text, point_text, folner_text = "standard";
  std::vector<std::string> cylinder_texts;
  std::int64_t horizon = 100;
  std::string fraction_text = "1/2";
  CLI::App* density = app.add_subcommand(
      "density", "window ratios and tail-envelope density estimates");
  density->add_option("--set", set_text, "integer set spec (JSON or name)");
  density->add_option("--point", point_text,
                      "point spec; switches to sojourn of --cylinder visits");
  density->add_option("--cylinder", cylinder_texts,
                      "cylinder as word@position, repeatable");
  density->add_option("--folner", folner_text, "sequence spec");
  density->add_option("--horizon", horizon, "last index scanned");
  density->add_option("--fraction", fraction_text,
                      "headline window fraction (p/q or decimal)");

  // coa
  std::string coa_point, coa_folner = "standard", coa_tol = "1/20",
              coa_fraction = "1/2";
  std::int64_t coa_k = 1, coa_horizon = 100;
  CLI::App* coa = app.add_subcommand(
      "coa", "attractor cover: kept cylinder words with density evidence");
  coa->add_option("--point", coa_point, "point spec")->required();
  coa->add_option("--folner", coa_folner, "sequence spec");
  coa->add_option("-k,--resolution", coa_k, "word radius k (length 2k+1)");
  coa->add_option("--horizon", coa_horizon, "last index scanned");
  coa->add_option("--tol", coa_tol, "keep words with tail upper > tol");
  coa->add_option("--fraction", coa_fraction, "headline window fraction");

  // setclass
  std::string sc_set;
  bool sc_triple = false;
  std::int64_t sc_lo = 1, sc_hi = 10000, sc_run_length = 3;
  CLI::App* setclass = app.add_subcommand(
      "setclass", "gap/run/witness tables over a horizon ladder");
  setclass->add_option("--set", sc_set, "integer set spec");
  setclass->add_flag("--triple", sc_triple, "analyze the built-in thick triple");
  setclass->add_option("--lo", sc_lo, "window start");
  setclass->add_option("--hi", sc_hi, "window end");
  setclass->add_option("--run-length", sc_run_length,
                       "run length for start-gap analysis");

  // chaos
  std::string ch_x, ch_y, ch_tails = "10,100,1000";
  std::int64_t ch_horizon = 10000, ch_resolution = 6, ch_threshold = 5,
               ch_separation = 0, ch_count = 8, ch_k = 2;
  bool ch_fchaotic = false, ch_tuple = false;
  std::vector<std::string> ch_targets;
  CLI::App* chaos = app.add_subcommand(
      "chaos", "proximal/tail scans, pair verdicts, sensitivity witnesses");
  chaos->add_option("--x", ch_x, "first point spec")->required();
  chaos->add_option("--y", ch_y, "second point spec");
  chaos->add_option("--horizon", ch_horizon, "translate scan bound");
  chaos->add_option("-R,--resolution", ch_resolution, "metric resolution");
  chaos->add_option("--threshold-exponent", ch_threshold,
                    "proximality accepts minima at most 2^-e");
  chaos->add_option("--separation-exponent", ch_separation,
                    "separation requires exact distance at least 2^-e");
  chaos->add_option("--tails", ch_tails, "comma list of tail indices");
  chaos->add_flag("--fchaotic", ch_fchaotic, "add the four-list pair witness");
  chaos->add_option("--count", ch_count, "witnesses per separation list");
  chaos->add_flag("--tuple", ch_tuple, "tuple splice search mode");
  chaos->add_option("--target", ch_targets, "tuple target point, repeatable");
  chaos->add_option("-k", ch_k, "tuple ball radius exponent");

  // example
  std::string example_id;
  CLI::App* example = app.add_subcommand(
      "example", "scripted verification of a built-in construction");
  example->add_option("id", example_id,
                      "construction: blocks, decades, or alternating")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*density)
      return run_density(common, set_text, point_text, cylinder_texts,
                         folner_text, horizon, fraction_text);
    if (*coa)
      return run_coa(common, coa_point, coa_folner, coa_k, coa_horizon,
                     coa_tol, coa_fraction);
    if (*setclass)
      return run_setclass(common, sc_set, sc_triple, sc_lo, sc_hi,
                          sc_run_length);
    if (*chaos)
      return run_chaos(common, ch_x, ch_y, ch_horizon, ch_resolution,
                       ch_threshold, ch_separation, ch_tails, ch_fchaotic,
                       ch_count, ch_tuple, ch_targets, ch_k);
    if (*example) return run_example(common, example_id);
  } catch (const orbit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const orbit::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
