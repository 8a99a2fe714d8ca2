#ifndef HGMAN_CONFIG_HPP
#define HGMAN_CONFIG_HPP

#include <array>
#include <string>
#include <vector>

#include "hgman/hg.hpp"
#include "hgman/lie.hpp"

namespace hgman {

/// Parsed manifold description. Indices arrive 1-based in the file and are
/// stored 0-based here; rationals arrive as integers or "p/q" strings.
struct ManifoldConfig {
  int dim = 0;
  std::vector<StructureEntry> structure_constants;
  Tensor metric;  // (0,2)
  bool standard_j = true;
  std::array<Tensor, 3> J;  // only when standard_j is false
  bool has_lambdas = false;
  std::array<Rational, 4> lambdas;  // selects the worked-example family
};

/// Parses the JSON text of a manifold description; malformed input raises
/// ParseError naming the offending field.
ManifoldConfig parse_manifold_config(const std::string& json_text);

/// Assembles the manifold (the worked-example family when lambdas are
/// present, the explicit data otherwise). Structural violations surface as
/// StructureError from the underlying builders.
HGManifold manifold_from_config(const ManifoldConfig& config);

}  // namespace hgman

#endif
