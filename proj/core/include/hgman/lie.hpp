#ifndef HGMAN_LIE_HPP
#define HGMAN_LIE_HPP

#include <array>
#include <vector>

#include "hgman/tensor.hpp"

namespace hgman {

/// Structure constants of a Lie algebra in a fixed frame:
/// [e_i, e_j] = c(i,j,k) e_k. The geometry built on top is the left-invariant
/// geometry of the corresponding Lie group, so frame components of every
/// tensor are constant and differentiation reduces to algebra.
struct LieAlgebra {
  int dim = 0;
  Tensor c;  // slots (i,j,k), variance (down,down,up)

  static LieAlgebra zero(int dim);
};

struct StructureEntry {
  int i = 0, j = 0, k = 0;  // 0-based
  Rational value;
};

/// Builds an algebra from sparse entries; each entry sets c(i,j,k) = v and
/// c(j,i,k) = -v. Conflicting duplicates raise StructureError.
LieAlgebra make_lie_algebra(int dim, const std::vector<StructureEntry>& entries);

struct LieValidation {
  std::vector<std::array<int, 3>> antisymmetry_faults;  // (i,j,k)
  std::vector<std::array<int, 4>> jacobi_faults;        // (i,j,l,m)

  bool ok() const { return antisymmetry_faults.empty() && jacobi_faults.empty(); }
};

/// Checks c(i,j,k) = -c(j,i,k) and the Jacobi identity, reporting every
/// violating index tuple.
LieValidation validate(const LieAlgebra& lie);

/// Connection coefficients: nabla_{e_i} e_j = gamma(i,j,k) e_k.
struct Connection {
  Tensor gamma;  // slots (i,j,k), variance (down,down,up)
};

/// Levi-Civita connection of a left-invariant metric via the Koszul formula
/// 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
/// Torsion-freeness and metric parallelism are re-verified post-hoc.
Connection levi_civita(const LieAlgebra& lie, const Metric& metric);

/// Curvature (0,4)-tensor of an arbitrary connection,
/// R(x,y,z,w) = g((nabla_x nabla_y - nabla_y nabla_x - nabla_{[x,y]}) z, w).
Tensor curvature(const LieAlgebra& lie, const Connection& conn, const Metric& metric);

/// Ricci tensor rho(y,z) = g^{is} R(e_i,y,z,e_s).
Tensor ricci(const Tensor& riemann, const Metric& metric);

/// Scalar curvature tau = g^{jk} rho(e_j,e_k).
Rational scalar_curvature(const Tensor& rho, const Metric& metric);

/// Torsion t(i,j,k) e_k = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i,e_j].
Tensor torsion_vector(const LieAlgebra& lie, const Connection& conn);

/// Covariant derivative of a constant-component tensor field; the result
/// carries one extra leading down slot for the direction.
Tensor covariant_derivative(const Tensor& t, const Connection& conn);

/// Nijenhuis tensor of an almost complex structure J on the algebra,
/// N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y]; slots (i,j,k) as above.
Tensor nijenhuis(const Tensor& J, const LieAlgebra& lie);

/// Whether [Jx, Jy] = [x, y] for all frame pairs.
bool abelian_structure(const Tensor& J, const LieAlgebra& lie);

/// Exterior differential of a left-invariant 1-form:
/// (d theta)(x,y) = -theta([x,y]).
Tensor exterior_d(const Tensor& oneform, const LieAlgebra& lie);

}  // namespace hgman

#endif
