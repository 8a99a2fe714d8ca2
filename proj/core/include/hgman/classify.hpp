#ifndef HGMAN_CLASSIFY_HPP
#define HGMAN_CLASSIFY_HPP

#include <array>
#include <string>

#include "hgman/check.hpp"
#include "hgman/hg.hpp"

namespace hgman {

/// Exact class membership of the structure. Every predicate is a
/// componentwise identity over the rationals, so membership is decidable,
/// with the first offending index tuple recorded as a witness.
struct ClassificationReport {
  bool in_k = false;  // all structural tensors vanish (parallel structure)
  std::array<bool, 3> in_w_j{};  // F_alpha matches its conformal-class closed form
  bool in_w = false;             // all three memberships at once
  bool isotropic_hk = false;     // every invariant square norm vanishes
  std::array<bool, 3> integrable{};  // Nijenhuis tensor of J_alpha vanishes
  bool d_theta_zero = false;         // the unified Lee form is closed

  std::string k_witness;  // first nonzero structural component when !in_k
  std::array<std::string, 3> w_j_witness;
  std::array<std::string, 3> integrable_witness;
  std::string d_theta_witness;

  /// Conformal-family cross-checks: reproduction of every F_alpha from the
  /// unified Lee form and closedness of that form; skipped off-family.
  CheckReport cross_checks;
};

/// Decides every membership from the structural tensors and Lee data.
/// The per-alpha closed forms use the Lee form of the same alpha with
/// coefficient 1/(2(2n-1)) for the Hermitian structure and 1/(4n) for the
/// two Norden structures.
ClassificationReport classify(const HGManifold& M, const std::array<Tensor, 3>& F,
                              const LeeData& lee);

/// Membership of a single structural tensor in its conformal class
/// (alpha is 1-based); the Lee form is recomputed from `f` itself so the
/// test is self-contained. When `witness` is non-null and the answer is
/// false, it receives the first offending 1-based index tuple.
bool conformal_class_membership(const HGManifold& M, const Tensor& f, int alpha,
                                std::string* witness);

/// Verifies that any two of the three conformal-class memberships force the
/// third, recomputing memberships directly from the given tensors. A
/// violation contradicts a structural theorem and raises InternalError.
CheckReport w_closure_check(const HGManifold& M, const std::array<Tensor, 3>& F);

}  // namespace hgman

#endif
