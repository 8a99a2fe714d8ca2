#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hgman/report.hpp"

using namespace hgman;

namespace {

PipelineResult family_run(long l1, long l2, long l3, long l4) {
  return run_pipeline(build_example_w4(
      {Rational(l1), Rational(l2), Rational(l3), Rational(l4)}));
}

bool mentions(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analysis report flattens flags, scalars and nonzero tables") {
  const PipelineResult r = family_run(1, 2, 3, 4);
  const AnalysisReport rep = build_report(r);

  CHECK(rep.dim == 4);
  CHECK(rep.flags.at("in_w"));
  CHECK_FALSE(rep.flags.at("in_k"));
  CHECK_FALSE(rep.flags.at("torsion_parallel"));
  CHECK(rep.flags.at("integrable_j1"));
  CHECK(rep.flags.at("d_theta_zero"));
  CHECK(rep.flags.at("lee_candidates_agree"));

  CHECK(rep.scalars.at("tau") == "-120");
  CHECK(rep.scalars.at("theta_omega") == "320");
  CHECK(rep.scalars.at("norm_j1") == "160");
  CHECK(rep.scalars.at("norm_j2") == "-320");

  CHECK(rep.tables.at("R").at("1,2,2,1") == "5");
  CHECK(rep.tables.at("ricci").at("1,1") == "-22");
  CHECK(rep.tables.at("theta").at("1") == "16");
  CHECK(rep.tables.at("theta").at("4") == "-4");
  CHECK(rep.tables.at("K").empty());  // the family is flat for D
  CHECK(rep.tables.at("R").count("1,1,1,1") == 0);  // zero entries omitted

  // false flags carry witnesses, true ones do not
  CHECK(rep.witnesses.count("in_k") == 1);
  CHECK(rep.witnesses.count("in_w") == 0);

  CHECK(rep.identity_suite.at("f_skew_symmetry") == "pass");
  CHECK(mentions(rep.conditional_checks.at("l_tensor_vanishes"), "skipped"));
  CHECK(rep.example_checks.empty());
  CHECK(rep.golden_diffs.empty());
}

TEST_CASE("serialization round-trips losslessly and deterministically") {
  const PipelineResult r = family_run(1, 2, 3, 4);

  const AnalysisReport plain = build_report(r);
  const std::string text = serialize_report(plain);
  CHECK(parse_report(text) == plain);
  CHECK(serialize_report(parse_report(text)) == text);
  CHECK(serialize_report(plain) == text);
  CHECK(text.back() == '\n');
  CHECK(mentions(text, "\"tau\": \"-120\""));

  const auto diffs = golden_table_diffs(r, {Rational(1), Rational(2), Rational(3),
                                            Rational(4)});
  const CheckReport checks = worked_example_checks(
      r, {Rational(1), Rational(2), Rational(3), Rational(4)});
  const AnalysisReport ex = build_example_report(r, diffs, checks);
  CHECK(ex.example_checks.at("natural_connection_flat_on_family") == "pass");
  const std::string ex_text = serialize_report(ex);
  CHECK(parse_report(ex_text) == ex);
  CHECK_FALSE(ex == plain);
}

TEST_CASE("golden differences survive the round trip") {
  PipelineResult r = family_run(1, 2, 3, 4);
  r.riemann(0, 1, 1, 0) += Rational(1);
  const std::array<Rational, 4> l{Rational(1), Rational(2), Rational(3),
                                  Rational(4)};
  const auto diffs = golden_table_diffs(r, l);
  REQUIRE_FALSE(diffs.empty());
  const AnalysisReport rep = build_example_report(r, diffs, worked_example_checks(r, l));
  CHECK(rep.golden_diffs == diffs);
  const AnalysisReport back = parse_report(serialize_report(rep));
  CHECK(back.golden_diffs == diffs);
  CHECK(back == rep);
}

TEST_CASE("reports from different runs differ and compare by value") {
  const AnalysisReport a = build_report(family_run(1, 2, 3, 4));
  const AnalysisReport b = build_report(family_run(0, 0, 0, 0));
  CHECK_FALSE(a == b);
  CHECK(b.flags.at("in_k"));
  CHECK(b.flags.at("torsion_parallel"));
  CHECK(b.scalars.at("tau") == "0");
  CHECK(b.tables.at("R").empty());
  const AnalysisReport a2 = build_report(family_run(1, 2, 3, 4));
  CHECK(a == a2);
}

TEST_CASE("parse_report rejects malformed documents") {
  CHECK_THROWS_AS(parse_report("{"), ParseError);
  CHECK_THROWS_AS(parse_report("[]"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"dim": "four"})"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"dim": 4, "flags": 7})"), ParseError);
}
