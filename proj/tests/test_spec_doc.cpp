// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include <string>

#include "doctest.h"
#include "orbit/attraction.hpp"
#include "orbit/density.hpp"
#include "orbit/errors.hpp"
#include "orbit/folner.hpp"
#include "orbit/integer_set.hpp"
#include "orbit/shift_space.hpp"
#include "orbit/spec_doc.hpp"

using orbit::Alphabet;
using orbit::FolnerSequence;
using orbit::IndexExpr;
using orbit::IntegerSet;
using orbit::Json;
using orbit::MetricValue;
using orbit::SymbolicPoint;
using orbit::Word;

namespace {

// Asserts the call throws a ParseError whose message mentions `needle`, the
// offending field path or position.
template <typename Fn>
void expect_parse_error(Fn&& fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected a parse error mentioning '" << needle << "'");
  } catch (const orbit::ParseError& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("index expressions parse, evaluate, and round-trip") {
  IndexExpr decade = orbit::parse_index_expr("10^n+10*n-1");
  CHECK(decade.eval(3) == orbit::BigInt(1029));
  CHECK(decade.eval(0) == orbit::BigInt(0));
  CHECK(decade.eval(30) ==
        orbit::BigInt("1000000000000000000000000000299"));
  CHECK(orbit::parse_index_expr(decade.text()).eval(7) == decade.eval(7));

  CHECK(orbit::parse_index_expr("(n+1)*(n+2)").eval(3) == orbit::BigInt(20));
  CHECK(orbit::parse_index_expr("-n+5").eval(2) == orbit::BigInt(3));
  CHECK(orbit::parse_index_expr("2^n").eval(10) == orbit::BigInt(1024));
  CHECK(orbit::parse_index_expr(" n * n + n ").eval(4) == orbit::BigInt(20));

  expect_parse_error([] { orbit::parse_index_expr("10^m"); }, "index variable");
  expect_parse_error([] { orbit::parse_index_expr("1^n"); }, "at least 2");
  expect_parse_error([] { orbit::parse_index_expr("3+"); }, "offset");
  expect_parse_error([] { orbit::parse_index_expr("(n"); }, "')'");
  expect_parse_error([] { orbit::parse_index_expr("n n"); }, "trailing");
  expect_parse_error([] { orbit::parse_index_expr(""); }, "integer");
}

TEST_CASE("set documents cover every node type") {
  IntegerSet fin = orbit::parse_set_doc(
      Json::parse(R"({"type":"finite","elements":[3,-1]})"));
  CHECK(fin.contains(3));
  CHECK(fin.contains(-1));
  CHECK_FALSE(fin.contains(0));

  IntegerSet prog = orbit::parse_set_doc(
      Json::parse(R"({"type":"progression","modulus":3,"residue":1})"));
  CHECK(prog.contains(4));
  CHECK(prog.contains(-2));
  CHECK_FALSE(prog.contains(5));

  IntegerSet blocks = orbit::parse_set_doc(Json::parse(
      R"({"type":"blocks","start":"10^n+10*n","end":"10^n+10*n+n-1",
          "first_index":1})"));
  CHECK(blocks.contains(20));
  CHECK_FALSE(blocks.contains(21));
  CHECK(blocks.contains(120));
  CHECK(blocks.contains(121));
  CHECK_FALSE(blocks.contains(122));

  IntegerSet combo = orbit::parse_set_doc(Json::parse(
      R"({"type":"translate","g":2,"of":
           {"type":"union","parts":[
             {"type":"finite","elements":[1]},
             {"type":"progression","modulus":10,"residue":0}]}})"));
  CHECK(combo.contains(3));
  CHECK(combo.contains(2));
  CHECK(combo.contains(12));
  CHECK_FALSE(combo.contains(1));

  IntegerSet neg = orbit::parse_set_doc(Json::parse(
      R"({"type":"negate","of":{"type":"finite","elements":[7]}})"));
  CHECK(neg.contains(-7));
  IntegerSet comp = orbit::parse_set_doc(Json::parse(
      R"({"type":"complement","of":{"type":"progression","modulus":2,
          "residue":0}})"));
  CHECK(comp.contains(1));
  CHECK_FALSE(comp.contains(2));
}

TEST_CASE("named set shorthands match the built-in families") {
  CHECK(orbit::parse_set_text("block_support").contains(2));
  IntegerSet a = orbit::parse_set_text("decade_a");
  IntegerSet b = orbit::parse_set_text("decade_b");
  IntegerSet c = orbit::parse_set_text("decade_c");
  CHECK(a.contains(10));
  CHECK(a.contains(19));
  CHECK(b.contains(20));
  CHECK(b.contains(29));
  CHECK(c.contains(122));
  CHECK(c.contains(38));
  CHECK_FALSE(a.contains(-10));
}

TEST_CASE("set document errors name the offending field") {
  expect_parse_error(
      [] { orbit::parse_set_doc(Json::parse(R"({"oops":1})")); },
      "missing field 'type'");
  expect_parse_error(
      [] { orbit::parse_set_doc(Json::parse(R"({"type":"wat"})")); },
      "set.type");
  expect_parse_error(
      [] {
        orbit::parse_set_doc(Json::parse(
            R"({"type":"union","parts":[
                 {"type":"finite","elements":[1]},
                 {"type":"finite","elements":["x"]}]})"));
      },
      "set.parts[1].elements");
  expect_parse_error([] { orbit::parse_set_text("no_such_set"); },
                     "unknown set name");
  expect_parse_error([] { orbit::parse_set_text("{oops"); }, "malformed");
}

TEST_CASE("point documents build every rule type") {
  CHECK(orbit::parse_point_text("zeros").eval(5) == 0);
  CHECK(orbit::parse_point_text("ones").eval(-3) == 1);
  CHECK(orbit::parse_point_text("block_indicator").eval(2) == 1);
  CHECK(orbit::parse_point_text("alternating_blocks").eval(0) == 0);
  CHECK(orbit::parse_point_text("alternating_blocks").eval(1) == 1);
  CHECK(orbit::parse_point_text("word_stream").eval(1) == 1);

  SymbolicPoint ternary = orbit::parse_point_doc(
      Json::parse(R"({"type":"periodic","word":"012"})"));
  CHECK(ternary.alphabet().size == 3);
  CHECK(ternary.eval(0) == 0);
  CHECK(ternary.eval(2) == 2);
  CHECK(ternary.eval(3) == 0);
  CHECK(ternary.eval(-1) == 2);

  SymbolicPoint phased = orbit::parse_point_doc(
      Json::parse(R"({"type":"periodic","word":"01","phase":1})"));
  CHECK(phased.eval(1) == 0);
  CHECK(phased.eval(0) == 1);

  SymbolicPoint ind = orbit::parse_point_doc(
      Json::parse(R"({"type":"indicator","set":"block_support"})"));
  CHECK(ind.eval(0) == 1);
  CHECK(ind.eval(1) == 0);

  SymbolicPoint patched = orbit::parse_point_doc(Json::parse(
      R"({"type":"mutation","base":"zeros","patches":[[0,1],[5,1]]})"));
  CHECK(patched.eval(0) == 1);
  CHECK(patched.eval(5) == 1);
  CHECK(patched.eval(1) == 0);

  SymbolicPoint moved = orbit::parse_point_doc(Json::parse(
      R"({"type":"shift","base":"alternating_blocks","g":2})"));
  SymbolicPoint base = orbit::alternating_block_point();
  for (std::int64_t i = -5; i <= 5; ++i)
    CHECK(moved.eval(i) == base.eval(i + 2));

  expect_parse_error([] { orbit::parse_point_text("no_such_point"); },
                     "unknown point name");
  expect_parse_error(
      [] {
        orbit::parse_point_doc(Json::parse(
            R"({"type":"mutation","base":"zeros","patches":[[0]]})"));
      },
      "point.patches");
}

TEST_CASE("folner documents select and translate the built-ins") {
  FolnerSequence std_seq = orbit::parse_folner_text("standard");
  CHECK(std_seq.interval(2).lo == -2);
  CHECK(std_seq.interval(2).hi == 2);
  CHECK(orbit::parse_folner_text("block_form").interval(4).lo == 6);
  CHECK(orbit::parse_folner_text("gap_form").interval(2).lo == 4);

  FolnerSequence moved = orbit::parse_folner_doc(
      Json::parse(R"({"type":"translate","base":"standard","g":5})"));
  CHECK(moved.interval(3).lo == 2);
  CHECK(moved.interval(3).hi == 8);

  expect_parse_error([] { orbit::parse_folner_text("diagonal"); },
                     "unknown sequence name");
  expect_parse_error(
      [] { orbit::parse_folner_doc(Json::parse(R"({"type":"diag"})")); },
      "folner.type");
}

TEST_CASE("metric values round-trip through their text form") {
  CHECK(orbit::metric_text(MetricValue::exact_at(0)) == "1");
  CHECK(orbit::metric_text(MetricValue::exact_at(3)) == "2^-3");
  CHECK(orbit::metric_text(MetricValue::upper(6)) == "<=2^-6");

  for (const std::string& text : {"1", "2^-3", "<=2^-6", "<=2^-1"}) {
    MetricValue v = orbit::parse_metric_text(text);
    CHECK(orbit::metric_text(v) == text);
  }
  MetricValue v = orbit::parse_metric_text("2^-4");
  CHECK(v.is_exact());
  CHECK(v.exponent == 4);

  CHECK_THROWS_AS(orbit::parse_metric_text("3^-1"), orbit::ParseError);
  CHECK_THROWS_AS(orbit::parse_metric_text("2^-x"), orbit::ParseError);
  CHECK_THROWS_AS(orbit::parse_metric_text("<="), orbit::ParseError);
}

TEST_CASE("density reports round-trip through JSON exactly") {
  orbit::DensityReport report = orbit::density_report(
      IntegerSet::progression(2, 0), FolnerSequence::standard(), 30,
      orbit::make_ratio(1, 2));
  Json doc = orbit::density_to_json(report);
  CHECK(doc["headline_window"] == Json::array({15, 30}));
  CHECK(doc["ratios"].size() == 31);
  CHECK(doc["folner"] == report.folner_label);

  orbit::DensityReport back = orbit::density_from_json(doc);
  CHECK(back.folner_label == report.folner_label);
  CHECK(back.set_description == report.set_description);
  CHECK(back.horizon == report.horizon);
  CHECK(back.window_lo == report.window_lo);
  CHECK(back.headline_upper == report.headline_upper);
  CHECK(back.headline_lower == report.headline_lower);
  REQUIRE(back.ratios.size() == report.ratios.size());
  for (std::size_t i = 0; i < back.ratios.size(); ++i) {
    CHECK(back.ratios[i].first == report.ratios[i].first);
    CHECK(back.ratios[i].second == report.ratios[i].second);
  }
  REQUIRE(back.envelope.size() == report.envelope.size());
  for (std::size_t i = 0; i < back.envelope.size(); ++i) {
    CHECK(back.envelope[i].m == report.envelope[i].m);
    CHECK(back.envelope[i].upper == report.envelope[i].upper);
    CHECK(back.envelope[i].lower == report.envelope[i].lower);
  }

  expect_parse_error(
      [] { orbit::density_from_json(Json::parse(R"({"folner":"x"})")); },
      "missing field 'set'");
}

TEST_CASE("cover and verdict serializations expose the expected fields") {
  SymbolicPoint alt =
      orbit::make_periodic(Word::from_text(Alphabet(2), "01"), 0);
  orbit::AttractorCover cover = orbit::attractor_cover(
      alt, FolnerSequence::standard(), 1, 40, orbit::make_ratio(3, 10),
      orbit::make_ratio(1, 2));
  Json doc = orbit::cover_to_json(cover);
  CHECK(doc["k"] == 1);
  CHECK(doc["horizon"] == 40);
  REQUIRE(doc["kept"].size() == 2);
  CHECK(doc["kept"][0]["word"] == "010");
  CHECK(doc["kept"][1]["word"] == "101");
  CHECK(doc["kept"][0].contains("upper"));
  CHECK(doc["kept"][0].contains("lower"));
  CHECK(doc["union_sojourn"].contains("headline_upper"));
  CHECK(doc["scan_range"].is_array());

  std::string tsv = orbit::cover_to_tsv(cover);
  CHECK(tsv.rfind("word\tupper\tupper_decimal\tlower\tlower_decimal\n", 0) ==
        0);

  orbit::ChaosVerdict verdict = orbit::li_yorke_verdict(
      orbit::make_indicator(orbit::block_support()),
      orbit::make_periodic(Word::from_text(Alphabet(2), "1"), 0), 500, 6, 5,
      {10, 100});
  Json vdoc = orbit::verdict_to_json(verdict);
  CHECK(vdoc["liyorke"] == true);
  CHECK(vdoc["proximal"]["min"] == "<=2^-7");
  CHECK(vdoc["proximal"]["witnesses"].size() == 7);
  REQUIRE(vdoc["tail_sup"].size() == 2);
  CHECK(vdoc["tail_sup"][0]["n"] == 10);
  CHECK(vdoc["tail_sup"][0]["value"] == "1");
}

TEST_CASE("pair and tuple serializations") {
  SymbolicPoint zeros =
      orbit::make_periodic(Word::from_text(Alphabet(2), "0"), 0);
  SymbolicPoint ones =
      orbit::make_periodic(Word::from_text(Alphabet(2), "1"), 0);
  Json pair = orbit::pair_witness_to_json(
      orbit::chaos_pair_witness(zeros, ones, 50, 4, 2, 0));
  CHECK(pair["approach_to_partner"].empty());
  CHECK(pair["apart_from_partner"].size() == 2);
  CHECK(pair["separation_floor"] == "1");

  Json tuple = orbit::tuple_report_to_json(
      orbit::tuple_sensitivity_witness(zeros, {ones}, 1, 50));
  CHECK(tuple["unrestricted"]["found"] == true);
  CHECK(tuple["unrestricted"]["g"] == 3);
  CHECK(tuple["unrestricted"]["patches"][0].size() == 3);
  CHECK(tuple["restricted"]["found"] == false);
  CHECK_FALSE(tuple["restricted"].contains("g"));
}

TEST_CASE("density TSV lists one exact ratio per index") {
  orbit::DensityReport report = orbit::density_report(
      IntegerSet::progression(2, 0), FolnerSequence::standard(), 4,
      orbit::make_ratio(1, 2));
  std::string tsv = orbit::density_to_tsv(report);
  CHECK(tsv ==
        "n\tratio\tdecimal_approx\n"
        "0\t1/1\t1.000000\n"
        "1\t1/3\t0.333333\n"
        "2\t3/5\t0.600000\n"
        "3\t3/7\t0.428571\n"
        "4\t5/9\t0.555556\n");
}
