#ifndef HGMAN_HG_HPP
#define HGMAN_HG_HPP

#include <array>

#include "hgman/check.hpp"
#include "hgman/lie.hpp"
#include "hgman/tensor.hpp"

namespace hgman {

/// Signs attached to the three almost complex structures: J_1 acts
/// isometrically (Hermitian), J_2 and J_3 anti-isometrically (Norden).
inline constexpr std::array<int, 3> kEps{1, -1, -1};

/// The standard quaternionic triple acting blockwise on frames of dimension
/// 4n; satisfies J_a = J_b J_c = -J_c J_b cyclically and J_a^2 = -identity.
std::array<Tensor, 3> standard_hypercomplex(int n);

/// A frame-based almost hypercomplex manifold with a metric that is
/// Hermitian for J_1 and anti-Hermitian (Norden) for J_2, J_3, realized as a
/// left-invariant structure on the Lie group of `lie`.
struct HGManifold {
  LieAlgebra lie;
  Metric metric;
  std::array<Tensor, 3> J;        // (1,1) each
  std::array<Tensor, 3> g_alpha;  // g_alpha(x,y) = g(J_alpha x, y)

  int dim() const { return lie.dim; }
  int n() const { return lie.dim / 4; }
};

/// Validates every structural requirement exactly (quaternionic relations,
/// metric compatibility with signs kEps, neutral signature, nondegeneracy of
/// the associated forms) and assembles the manifold. Violations raise
/// StructureError naming the identity and the first offending indices.
HGManifold make_hg_manifold(const LieAlgebra& lie, const Tensor& g,
                            const std::array<Tensor, 3>& J);

/// Composition with J in the last two slots of a (0,4)-tensor:
/// (t o J)(x,y,z,w) = t(x,y,Jz,Jw).
Tensor compose_last_pair(const Tensor& t, const Tensor& J);

/// Composition with J in the first two slots: t(Jx,Jy,z,w).
Tensor compose_first_pair(const Tensor& t, const Tensor& J);

/// Pullback of a 1-form: (theta o J)(z) = theta(Jz).
Tensor compose_form(const Tensor& oneform, const Tensor& J);

/// Structural tensor F_alpha(x,y,z) = g((nabla_x J_alpha) y, z) for the
/// Levi-Civita connection; alpha is 1-based in {1,2,3}.
Tensor structural_f(const HGManifold& M, const Connection& nabla, int alpha);

/// Lee forms, their metric duals, the unified Lee form, and the invariant
/// square norms of nabla J_alpha.
struct LeeData {
  std::array<Tensor, 3> theta_alpha;  // (0,1): g^{ij} F_alpha(e_i,e_j,.)
  std::array<Tensor, 3> omega_alpha;  // raised theta_alpha
  std::array<Tensor, 3> theta_j;      // theta o J_alpha (of the unified theta)
  Tensor theta;  // unified Lee form (from alpha = 1; see candidates_agree)
  Tensor omega;  // raised theta
  /// The three rescalings 4n/(1 - eps_alpha(4n-1)) * theta_alpha o J_alpha;
  /// they coincide exactly on a conformal-family manifold.
  std::array<Tensor, 3> theta_candidates;
  bool candidates_agree = false;
  std::array<Rational, 3> norms;          // ||nabla J_alpha||^2
  Rational theta_omega;                   // theta(Omega)
  std::array<Rational, 3> theta_j_omega;  // theta(J_alpha Omega)
};

LeeData lee_data(const HGManifold& M, const std::array<Tensor, 3>& F);

/// Verifies the identities every almost (H,G)-manifold satisfies: the
/// F-symmetries, the cross-alpha exchange rules, the curvature commutation
/// rules for nabla F, the Norden cyclic curvature identity (only where the
/// corresponding structure is integrable), the cyclic annihilation of the
/// associated-form pairings, and theta(J_1 Omega) = 0.
CheckReport f_identity_suite(const HGManifold& M, const Connection& nabla,
                             const std::array<Tensor, 3>& F, const Tensor& riemann,
                             const LeeData& lee);

/// Verifies the Lee-form scaling relations that hold on conformal-family
/// manifolds: the theta(Omega) rescalings across alpha, the closed form of
/// the square norms, the dimension-4 norm ratios, and the equivalence
/// "all norms vanish iff theta(Omega) = 0".
/// Preconditions: `in_w` must be true (raises PreconditionError otherwise);
/// disagreement of the unified-Lee candidates then indicates a bug upstream
/// and raises InternalError.
CheckReport lee_relations_check(const HGManifold& M, const LeeData& lee, bool in_w);

}  // namespace hgman

#endif
