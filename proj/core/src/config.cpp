#include "hgman/config.hpp"

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgman/errors.hpp"
#include "hgman/example.hpp"

namespace hgman {

namespace {

using nlohmann::json;

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

Tensor matrix_from(const json& rows, int dim, const std::vector<Variance>& variance,
                   const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  Tensor t(dim, variance);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError(where + " row " + std::to_string(i + 1) + ": expected " +
                       std::to_string(dim) + " values");
    for (int j = 0; j < dim; ++j)
      t(i, j) = rational_from(row[static_cast<std::size_t>(j)],
                              where + "[" + std::to_string(i + 1) + "][" +
                                  std::to_string(j + 1) + "]");
  }
  return t;
}

}  // namespace

ManifoldConfig parse_manifold_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config: top level must be an object");

  ManifoldConfig cfg;

  if (doc.contains("lambdas")) {
    const json& lam = doc["lambdas"];
    if (!lam.is_array() || lam.size() != 4)
      throw ParseError("config.lambdas: expected exactly four values");
    cfg.has_lambdas = true;
    for (int i = 0; i < 4; ++i)
      cfg.lambdas[static_cast<std::size_t>(i)] =
          rational_from(lam[static_cast<std::size_t>(i)],
                        "config.lambdas[" + std::to_string(i + 1) + "]");
    cfg.dim = 4;
    if (doc.contains("dim") &&
        (!doc["dim"].is_number_integer() || doc["dim"].get<int>() != 4))
      throw ParseError("config.dim: the parameter family is four-dimensional");
    return cfg;
  }

  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("config.dim: required integer");
  cfg.dim = doc["dim"].get<int>();
  if (cfg.dim < 4 || cfg.dim % 4 != 0)
    throw ParseError("config.dim: must be a positive multiple of 4");

  if (!doc.contains("structure_constants") || !doc["structure_constants"].is_array())
    throw ParseError("config.structure_constants: required array");
  for (std::size_t r = 0; r < doc["structure_constants"].size(); ++r) {
    const json& e = doc["structure_constants"][r];
    const std::string where = "config.structure_constants[" + std::to_string(r + 1) + "]";
    if (!e.is_array() || e.size() != 4)
      throw ParseError(where + ": expected [i, j, k, value]");
    for (int p = 0; p < 3; ++p)
      if (!e[static_cast<std::size_t>(p)].is_number_integer())
        throw ParseError(where + ": indices must be integers");
    const int i = e[0].get<int>();
    const int j = e[1].get<int>();
    const int k = e[2].get<int>();
    if (i < 1 || i > cfg.dim || j < 1 || j > cfg.dim || k < 1 || k > cfg.dim)
      throw ParseError(where + ": indices must lie in 1.." + std::to_string(cfg.dim));
    cfg.structure_constants.push_back(
        {i - 1, j - 1, k - 1, rational_from(e[3], where + ".value")});
  }

  if (!doc.contains("metric")) throw ParseError("config.metric: required");
  const json& metric = doc["metric"];
  const std::vector<Variance> var02(2, Variance::down);
  if (metric.is_object() && metric.contains("diagonal")) {
    const json& diag = metric["diagonal"];
    if (!diag.is_array() || static_cast<int>(diag.size()) != cfg.dim)
      throw ParseError("config.metric.diagonal: expected " + std::to_string(cfg.dim) +
                       " values");
    cfg.metric = Tensor(cfg.dim, var02);
    for (int i = 0; i < cfg.dim; ++i)
      cfg.metric(i, i) = rational_from(
          diag[static_cast<std::size_t>(i)],
          "config.metric.diagonal[" + std::to_string(i + 1) + "]");
  } else if (metric.is_object() && metric.contains("dense")) {
    cfg.metric = matrix_from(metric["dense"], cfg.dim, var02, "config.metric.dense");
  } else {
    throw ParseError("config.metric: expected an object with \"diagonal\" or \"dense\"");
  }

  if (!doc.contains("J") || (doc["J"].is_string() &&
                             doc["J"].get<std::string>() == "standard")) {
    cfg.standard_j = true;
  } else if (doc["J"].is_array() && doc["J"].size() == 3) {
    cfg.standard_j = false;
    const std::vector<Variance> var11{Variance::up, Variance::down};
    for (int a = 0; a < 3; ++a)
      cfg.J[static_cast<std::size_t>(a)] =
          matrix_from(doc["J"][static_cast<std::size_t>(a)], cfg.dim, var11,
                      "config.J[" + std::to_string(a + 1) + "]");
  } else {
    throw ParseError("config.J: expected \"standard\" or three matrices");
  }

  return cfg;
}

HGManifold manifold_from_config(const ManifoldConfig& config) {
  if (config.has_lambdas) return build_example_w4(config.lambdas);
  const LieAlgebra lie = make_lie_algebra(config.dim, config.structure_constants);
  const std::array<Tensor, 3> J =
      config.standard_j ? standard_hypercomplex(config.dim / 4) : config.J;
  return make_hg_manifold(lie, config.metric, J);
}

}  // namespace hgman
