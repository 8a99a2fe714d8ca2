#ifndef HGMAN_NATURAL_HPP
#define HGMAN_NATURAL_HPP

#include <array>

#include "hgman/check.hpp"
#include "hgman/hg.hpp"

namespace hgman {

/// The canonical connection D = nabla + Q that makes the whole structure
/// parallel (D g = D J_alpha = 0), together with its potential, torsion and
/// curvature.
struct NaturalConnectionBundle {
  Tensor q_vec;        // potential, (down,down,up): D_x y = nabla_x y + Q(x,y)
  Tensor q;            // potential lowered to (0,3): q(x,y,z) = g(Q(x,y),z)
  Connection d;        // the natural connection itself
  Tensor torsion_vec;  // T(x,y) as a vector, (down,down,up)
  Tensor torsion;      // T lowered to (0,3)
  Tensor k;            // curvature of d, lowered to (0,4)
};

/// Builds the natural connection from the Levi-Civita data,
///   Q(x,y) = 1/4 sum_alpha (nabla_x J_alpha)(J_alpha y),
/// and verifies on the spot that it parallelizes g, every J_alpha and every
/// associated form, that the potential is skew in its last two arguments,
/// and that its curvature K satisfies K(x,y,J_alpha z,J_alpha w) =
/// eps_alpha K(x,y,z,w); any violation raises InternalError.
NaturalConnectionBundle build_natural_connection(const HGManifold& M,
                                                 const Connection& nabla,
                                                 const std::array<Tensor, 3>& F);

/// Verifies the algebraic identities tying the potential to the torsion and
/// the structural tensors: skewness of q in the last pair, the expression of
/// q through cyclic torsion combinations, the recovery of each F_alpha from
/// q, and the vanishing J-twisted sum of q.
CheckReport q_property_suite(const HGManifold& M, const NaturalConnectionBundle& bundle,
                             const std::array<Tensor, 3>& F);

/// Verifies the closed form of the torsion on a conformal-family manifold --
/// T expressed purely through the metric, the associated forms and the
/// unified Lee form -- and that the torsion annihilates the Lee vector.
/// Raises PreconditionError when `in_w` is false.
CheckReport w_torsion_formula(const HGManifold& M, const NaturalConnectionBundle& bundle,
                              const LeeData& lee, bool in_w);

/// The quadratic-in-nabla-J potential P of the curvature decomposition and
/// the Lee-form tensors it reduces to.
struct DecompositionTensors {
  Tensor P;  // (0,4) quadratic potential entering K = (proj of R) + P/16
  Tensor A;  // (0,2) symmetric Lee-square tensor of the flatness closed form
  Tensor B;  // (0,2) symmetric Lee-square tensor entering S
  Tensor C;  // (0,2) A + B, the tensor entering W
  Tensor E;  // (0,2) antisymmetric Lee pairing entering U
  Tensor U;  // (0,4) g_1 tensor E
  Tensor V;  // (0,4) (g KN B) + U/2, the conformal-family value of 16n^2 P
  Tensor W;  // (0,4) (g KN C) + U/2
  Tensor S;  // (0,4) R + (g KN B)/(64 n^2)
  Tensor S_hat;  // (0,4) S + U/(128 n^2)
  Tensor L;      // (0,4) R + (g KN A)/(64 n^2)
};

/// Assembles the decomposition tensors and verifies their built-in
/// symmetries exactly (A, B, C symmetric; E skew; U skew in both pairs and
/// eps-reflected by every J_alpha; V, W skew in both pairs; S, L with full
/// curvature symmetries). Violations raise InternalError.
DecompositionTensors build_decomposition(const HGManifold& M, const Tensor& riemann,
                                         const LeeData& lee,
                                         const std::array<Tensor, 3>& F);

/// Verifies how the natural curvature K decomposes: the universal formula
/// K = 1/4 {R + R o J_1 - R o J_2 - R o J_3} + P/16, the universal trace of
/// W, and -- on conformal-family manifolds -- the reduction of P to V and
/// the S_hat form of K.
CheckReport k_decomposition_checks(const HGManifold& M,
                                   const NaturalConnectionBundle& bundle,
                                   const DecompositionTensors& decomp,
                                   const Tensor& riemann, const LeeData& lee,
                                   bool in_w);

/// Outcome of the parallel-torsion study: which derived objects are parallel
/// for the natural connection, plus every consequence that provably follows
/// from parallel torsion, checked exactly where its hypotheses hold and
/// reported as skipped elsewhere.
struct ParallelTorsionReport {
  bool torsion_parallel = false;     // D T = 0
  bool structural_parallel = false;  // D F_alpha = 0 for all alpha
  bool lee_parallel = false;         // D theta = 0
  CheckReport checks;
};

/// Runs the parallel-torsion analysis. The equivalence "D T = 0 iff every
/// D F_alpha = 0" holds on any manifold and is enforced by InternalError;
/// on conformal-family manifolds "D T = 0 iff D theta = 0" is enforced the
/// same way. The conditional consequences (flatness of D, vanishing of L
/// and W, the closed curvature and Ricci forms, the torsion Jacobi identity,
/// the second-Bianchi Ricci form) are gated on their hypotheses.
ParallelTorsionReport parallel_torsion_analysis(
    const HGManifold& M, const Connection& nabla,
    const NaturalConnectionBundle& bundle, const std::array<Tensor, 3>& F,
    const LeeData& lee, const DecompositionTensors& decomp, const Tensor& riemann,
    const Tensor& rho, const Rational& tau, bool in_w);

}  // namespace hgman

#endif
