#include "hgman/report.hpp"

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgman/errors.hpp"

namespace hgman {

namespace {

using nlohmann::json;

std::string index_key(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

std::map<std::string, std::string> table_of(const Tensor& t) {
  std::map<std::string, std::string> out;
  std::vector<int> idx;
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    t.unflatten(f, idx);
    out.emplace(index_key(idx), t[f].str());
  }
  return out;
}

std::map<std::string, std::string> rendered(const CheckReport& report) {
  std::map<std::string, std::string> out;
  for (const CheckItem& item : report.items) out.emplace(item.name, item.render());
  return out;
}

}  // namespace

AnalysisReport build_report(const PipelineResult& result) {
  AnalysisReport rep;
  rep.dim = result.manifold.dim();

  const ClassificationReport& cls = result.classification;
  rep.flags["in_k"] = cls.in_k;
  rep.flags["in_w"] = cls.in_w;
  rep.flags["isotropic_hk"] = cls.isotropic_hk;
  rep.flags["d_theta_zero"] = cls.d_theta_zero;
  rep.flags["lee_candidates_agree"] = result.lee.candidates_agree;
  rep.flags["torsion_parallel"] = result.parallel_torsion.torsion_parallel;
  rep.flags["structural_parallel"] = result.parallel_torsion.structural_parallel;
  rep.flags["lee_parallel"] = result.parallel_torsion.lee_parallel;
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    const std::string suffix = "_j" + std::to_string(a + 1);
    rep.flags["in_w" + suffix] = cls.in_w_j[ai];
    rep.flags["integrable" + suffix] = cls.integrable[ai];
    if (!cls.in_w_j[ai]) rep.witnesses["in_w" + suffix] = cls.w_j_witness[ai];
    if (!cls.integrable[ai])
      rep.witnesses["integrable" + suffix] = cls.integrable_witness[ai];
  }
  if (!cls.in_k) rep.witnesses["in_k"] = cls.k_witness;
  if (!cls.d_theta_zero) rep.witnesses["d_theta_zero"] = cls.d_theta_witness;

  rep.scalars["tau"] = result.tau.str();
  rep.scalars["theta_omega"] = result.lee.theta_omega.str();
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    rep.scalars["norm_j" + std::to_string(a + 1)] = result.lee.norms[ai].str();
    rep.scalars["theta_j" + std::to_string(a + 1) + "_omega"] =
        result.lee.theta_j_omega[ai].str();
  }

  rep.identity_suite = rendered(result.identity_suite);
  rep.conditional_checks = rendered(result.conditional_checks);

  rep.tables["nabla"] = table_of(result.nabla.gamma);
  for (int a = 0; a < 3; ++a)
    rep.tables["F_" + std::to_string(a + 1)] =
        table_of(result.F[static_cast<std::size_t>(a)]);
  rep.tables["theta"] = table_of(result.lee.theta);
  rep.tables["D"] = table_of(result.bundle.d.gamma);
  rep.tables["T"] = table_of(result.bundle.torsion);
  rep.tables["R"] = table_of(result.riemann);
  rep.tables["K"] = table_of(result.bundle.k);
  rep.tables["ricci"] = table_of(result.rho);

  return rep;
}

AnalysisReport build_example_report(const PipelineResult& result,
                                    const std::vector<GoldenDiff>& diffs,
                                    const CheckReport& example_checks) {
  AnalysisReport rep = build_report(result);
  rep.golden_diffs = diffs;
  for (const CheckItem& item : example_checks.items)
    rep.example_checks.emplace(item.name, item.render());
  return rep;
}

std::string serialize_report(const AnalysisReport& report) {
  json doc;
  doc["dim"] = report.dim;
  doc["flags"] = report.flags;
  doc["witnesses"] = report.witnesses;
  doc["scalars"] = report.scalars;
  doc["identity_suite"] = report.identity_suite;
  doc["conditional_checks"] = report.conditional_checks;
  doc["tables"] = report.tables;
  doc["example_checks"] = report.example_checks;
  json diffs = json::array();
  for (const GoldenDiff& d : report.golden_diffs) {
    json e;
    e["table"] = d.table;
    e["entry"] = d.entry;
    e["computed"] = d.computed;
    e["expected"] = d.expected;
    diffs.push_back(std::move(e));
  }
  doc["golden_diffs"] = std::move(diffs);
  return doc.dump(2) + "\n";
}

AnalysisReport parse_report(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  AnalysisReport rep;
  try {
    rep.dim = doc.at("dim").get<int>();
    rep.flags = doc.at("flags").get<std::map<std::string, bool>>();
    rep.witnesses = doc.at("witnesses").get<std::map<std::string, std::string>>();
    rep.scalars = doc.at("scalars").get<std::map<std::string, std::string>>();
    rep.identity_suite =
        doc.at("identity_suite").get<std::map<std::string, std::string>>();
    rep.conditional_checks =
        doc.at("conditional_checks").get<std::map<std::string, std::string>>();
    rep.tables =
        doc.at("tables")
            .get<std::map<std::string, std::map<std::string, std::string>>>();
    rep.example_checks =
        doc.at("example_checks").get<std::map<std::string, std::string>>();
    for (const json& e : doc.at("golden_diffs")) {
      GoldenDiff d;
      d.table = e.at("table").get<std::string>();
      d.entry = e.at("entry").get<std::string>();
      d.computed = e.at("computed").get<std::string>();
      d.expected = e.at("expected").get<std::string>();
      rep.golden_diffs.push_back(std::move(d));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report shape mismatch: ") + e.what());
  }
  return rep;
}

}  // namespace hgman
