#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hgman/config.hpp"
#include "hgman/example.hpp"

using namespace hgman;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_manifold_config(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& message, const std::string& needle) {
  return message.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parameter-family config short-circuits everything else") {
  const ManifoldConfig cfg =
      parse_manifold_config(R"({"lambdas": [1, "1/2", -3, "4/5"]})");
  CHECK(cfg.has_lambdas);
  CHECK(cfg.dim == 4);
  CHECK(cfg.lambdas[0] == Rational(1));
  CHECK(cfg.lambdas[1] == Rational(1, 2));
  CHECK(cfg.lambdas[2] == Rational(-3));
  CHECK(cfg.lambdas[3] == Rational(4, 5));

  const HGManifold M = manifold_from_config(cfg);
  const HGManifold direct = build_example_w4(cfg.lambdas);
  CHECK(M.lie.c == direct.lie.c);
  CHECK(M.metric.g == direct.metric.g);
  for (int a = 0; a < 3; ++a) CHECK(M.J[a] == direct.J[a]);
}

TEST_CASE("explicit config builds the described manifold") {
  const std::string text = R"({
    "dim": 4,
    "structure_constants": [[1, 2, 3, "1"]],
    "metric": {"diagonal": [1, 1, -1, -1]},
    "J": "standard"
  })";
  const ManifoldConfig cfg = parse_manifold_config(text);
  CHECK_FALSE(cfg.has_lambdas);
  CHECK(cfg.dim == 4);
  REQUIRE(cfg.structure_constants.size() == 1);
  CHECK(cfg.structure_constants[0].i == 0);  // 1-based input, 0-based storage
  CHECK(cfg.structure_constants[0].j == 1);
  CHECK(cfg.structure_constants[0].k == 2);
  CHECK(cfg.structure_constants[0].value == Rational(1));
  CHECK(cfg.standard_j);

  const HGManifold M = manifold_from_config(cfg);
  CHECK(M.lie.c(0, 1, 2) == Rational(1));
  CHECK(M.metric.g(3, 3) == Rational(-1));
}

TEST_CASE("dense metric and explicit J matrices are accepted") {
  const std::string text = R"({
    "dim": 4,
    "structure_constants": [],
    "metric": {"dense": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]},
    "J": [
      [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
      [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
      [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]
    ]
  })";
  const ManifoldConfig cfg = parse_manifold_config(text);
  CHECK_FALSE(cfg.standard_j);
  CHECK(cfg.J[0](0, 1) == Rational(-1));
  CHECK(cfg.J[0](1, 0) == Rational(1));
  // this triple is the standard one, so the manifold builds cleanly
  const HGManifold M = manifold_from_config(cfg);
  CHECK(M.dim() == 4);
}

TEST_CASE("omitted J defaults to the standard structure") {
  const ManifoldConfig cfg = parse_manifold_config(R"({
    "dim": 4,
    "structure_constants": [],
    "metric": {"diagonal": [1, 1, -1, -1]}
  })");
  CHECK(cfg.standard_j);
}

TEST_CASE("parse errors carry the offending field path") {
  CHECK(mentions(error_of("not json at all"), "config is not valid JSON"));
  CHECK(mentions(error_of("[1,2]"), "top level must be an object"));
  CHECK(mentions(error_of(R"({"lambdas": [1, 2, 3]})"),
                 "config.lambdas: expected exactly four values"));
  CHECK(mentions(error_of(R"({"lambdas": [1, 2, 3, "x"]})"),
                 "config.lambdas[4]"));
  CHECK(mentions(error_of(R"({"lambdas": [1, 2, 3, 4], "dim": 8})"),
                 "config.dim: the parameter family is four-dimensional"));
  CHECK(mentions(error_of(R"({"metric": {"diagonal": [1, 1, -1, -1]}})"),
                 "config.dim: required integer"));
  CHECK(mentions(error_of(R"({"dim": 6, "structure_constants": [], "metric": {}})"),
                 "config.dim: must be a positive multiple of 4"));
  CHECK(mentions(error_of(R"({"dim": 4, "metric": {"diagonal": [1, 1, -1, -1]}})"),
                 "config.structure_constants: required array"));
  CHECK(mentions(
      error_of(R"({"dim": 4, "structure_constants": [[1, 2, 3]], "metric": {}})"),
      "config.structure_constants[1]: expected [i, j, k, value]"));
  CHECK(mentions(
      error_of(
          R"({"dim": 4, "structure_constants": [[1, 2, 5, "1"]], "metric": {}})"),
      "config.structure_constants[1]: indices must lie in 1..4"));
  CHECK(mentions(
      error_of(
          R"({"dim": 4, "structure_constants": [[1, 2, 3, "1/x"]], "metric": {}})"),
      "config.structure_constants[1].value"));
  CHECK(mentions(error_of(R"({"dim": 4, "structure_constants": []})"),
                 "config.metric: required"));
  CHECK(mentions(
      error_of(R"({"dim": 4, "structure_constants": [], "metric": {"x": 1}})"),
      "config.metric: expected an object"));
  CHECK(mentions(
      error_of(
          R"({"dim": 4, "structure_constants": [], "metric": {"diagonal": [1, 1]}})"),
      "config.metric.diagonal: expected 4 values"));
  CHECK(mentions(
      error_of(
          R"({"dim": 4, "structure_constants": [], "metric": {"diagonal": [1, 1, -1, -1]}, "J": "smth"})"),
      "config.J: expected \"standard\" or three matrices"));
}

TEST_CASE("manifold_from_config surfaces structural violations") {
  // valid JSON, invalid geometry: positive-definite metric cannot carry the
  // standard structure
  const ManifoldConfig cfg = parse_manifold_config(R"({
    "dim": 4,
    "structure_constants": [],
    "metric": {"diagonal": [1, 1, 1, 1]}
  })");
  CHECK_THROWS_AS(manifold_from_config(cfg), StructureError);
}
