#ifndef HGMAN_REPORT_HPP
#define HGMAN_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "hgman/example.hpp"
#include "hgman/pipeline.hpp"

namespace hgman {

/// Flat, serialization-ready view of a pipeline run. Rationals are "p" or
/// "p/q" strings; component keys are comma-separated 1-based indices; only
/// nonzero components are listed. Serialization round-trips losslessly.
struct AnalysisReport {
  int dim = 0;
  std::map<std::string, bool> flags;
  std::map<std::string, std::string> witnesses;  // only populated witnesses
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::string> identity_suite;      // name -> rendered status
  std::map<std::string, std::string> conditional_checks;  // name -> rendered status
  std::map<std::string, std::map<std::string, std::string>> tables;
  std::map<std::string, std::string> example_checks;  // worked-example mode only
  std::vector<GoldenDiff> golden_diffs;               // worked-example mode only

  bool operator==(const AnalysisReport&) const = default;
};

/// Report for an arbitrary manifold run.
AnalysisReport build_report(const PipelineResult& result);

/// Report for a worked-example run: the generic report plus the golden-table
/// residuals and the family-specific checks.
AnalysisReport build_example_report(const PipelineResult& result,
                                    const std::vector<GoldenDiff>& diffs,
                                    const CheckReport& example_checks);

/// Deterministic JSON with sorted keys, two-space indent, trailing newline.
std::string serialize_report(const AnalysisReport& report);

/// Inverse of serialize_report; malformed input raises ParseError.
AnalysisReport parse_report(const std::string& json_text);

}  // namespace hgman

#endif
