#ifndef HGMAN_KAHLER_HPP
#define HGMAN_KAHLER_HPP

#include <array>
#include <vector>

#include "hgman/tensor.hpp"

namespace hgman {

/// Result of the exact linear-algebra study of Kahler-like tensors: the
/// (4n)^4 component space cut down by the curvature-like symmetries
/// (skewness in both pairs, pair exchange, first Bianchi) and, optionally,
/// the eps-reflection constraints t(.,.,J_a .,J_a .) = eps_a t and
/// t(J_a .,J_a .,.,.) = eps_a t for each requested J_a of the standard
/// quaternionic triple.
struct KahlerlikeNullspace {
  int dim = 0;         // 4n
  long variables = 0;  // dim^4 raw components
  long rank = 0;       // variables - nullity
  long nullity = 0;    // dimension of the solution space
  std::vector<Tensor> basis;  // exact spanning set of the solution space
};

/// Eliminates the constraint system exactly (signed index identifications
/// first, then fraction-free integer elimination of the Bianchi rows) and
/// back-substitutes a rational basis. With all three reflections imposed the
/// nullity is the whole point: zero means every Kahler-like tensor on such a
/// structure vanishes. `impose_j` selects which of the three reflections to
/// impose; `with_basis` can be turned off to skip basis extraction on large
/// solution spaces. Raises PreconditionError unless n is 1 or 2.
KahlerlikeNullspace kahlerlike_nullspace(int n,
                                         const std::array<bool, 3>& impose_j = {
                                             true, true, true},
                                         bool with_basis = true);

}  // namespace hgman

#endif
