#ifndef HGMAN_EXAMPLE_HPP
#define HGMAN_EXAMPLE_HPP

#include <array>
#include <string>
#include <vector>

#include "hgman/check.hpp"
#include "hgman/hg.hpp"
#include "hgman/pipeline.hpp"

namespace hgman {

/// The four-dimensional solvable-Lie-group family: frame X_1..X_4 with
/// nonzero brackets
///   [X_1,X_4] = [X_2,X_3] = l1 X_1 + l2 X_2 + l3 X_3 + l4 X_4,
///   [X_1,X_3] = -[X_2,X_4] = l2 X_1 - l1 X_2 + l4 X_3 - l3 X_4,
/// metric diag(1,1,-1,-1) and the standard quaternionic triple. Valid for
/// every rational parameter vector, including zero.
HGManifold build_example_w4(const std::array<Rational, 4>& lambda);

/// One residual between a computed quantity and its published component
/// table evaluated at the family parameters.
struct GoldenDiff {
  std::string table;     // which table ("nabla", "F_1", "R", ...)
  std::string entry;     // 1-based index tuple
  std::string computed;  // exact value found
  std::string expected;  // exact value the table prescribes

  bool operator==(const GoldenDiff&) const = default;
};

/// Diffs every published component table of the family -- the Levi-Civita
/// coefficients, the three structural tensors, the Lee form, the natural
/// connection, the curvature, the Ricci tensor and the scalar curvature --
/// against the pipeline's first-principles computation at `lambda`.
/// Empty result means the tables are reproduced exactly.
std::vector<GoldenDiff> golden_table_diffs(const PipelineResult& result,
                                           const std::array<Rational, 4>& lambda);

/// The family's headline properties beyond raw tables: the Ricci closed form
/// of the curvature, flatness of the natural connection, conformal-family
/// membership, Abelian and integrable structures, and the equivalences
/// tying parallel structure / parallel torsion / isotropy / scalar flatness
/// to the parameters.
CheckReport worked_example_checks(const PipelineResult& result,
                                  const std::array<Rational, 4>& lambda);

/// Deterministic parameter samples: small rationals drawn from a fixed
/// stream, identical across platforms for a given seed.
std::vector<std::array<Rational, 4>> sample_lambdas(unsigned long long seed,
                                                    int count);

}  // namespace hgman

#endif
