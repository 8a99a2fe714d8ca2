#ifndef HGMAN_PIPELINE_HPP
#define HGMAN_PIPELINE_HPP

#include <array>

#include "hgman/check.hpp"
#include "hgman/classify.hpp"
#include "hgman/hg.hpp"
#include "hgman/lie.hpp"
#include "hgman/natural.hpp"

namespace hgman {

/// Everything the analysis computes for one manifold, from the Levi-Civita
/// layer through the natural connection, the curvature decomposition, the
/// classification and both check suites.
struct PipelineResult {
  HGManifold manifold;
  Connection nabla;
  std::array<Tensor, 3> F;  // structural tensors of nabla
  Tensor riemann;           // (0,4)
  Tensor rho;               // (0,2)
  Rational tau;
  LeeData lee;
  NaturalConnectionBundle bundle;
  DecompositionTensors decomp;
  ClassificationReport classification;
  ParallelTorsionReport parallel_torsion;

  /// Structural and curvature identities (conformal-family-only members are
  /// marked skipped off-family).
  CheckReport identity_suite;
  /// Consequences gated on parallel torsion / flatness hypotheses.
  CheckReport conditional_checks;

  bool all_passed() const {
    return identity_suite.all_passed() && conditional_checks.all_passed();
  }
};

/// Runs the full analysis. The Lie algebra is (re)validated first; Jacobi
/// or antisymmetry faults raise StructureError naming the first offending
/// indices.
PipelineResult run_pipeline(const HGManifold& M);

}  // namespace hgman

#endif
