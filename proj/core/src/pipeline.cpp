#include "hgman/pipeline.hpp"

#include <string>

#include "hgman/errors.hpp"

#include "detail.hpp"

namespace hgman {

using detail::tuple1;

PipelineResult run_pipeline(const HGManifold& M) {
  const LieValidation lv = validate(M.lie);
  if (!lv.ok()) {
    if (!lv.antisymmetry_faults.empty()) {
      const auto& f = lv.antisymmetry_faults.front();
      throw StructureError("structure constants are not antisymmetric at " +
                           tuple1({f[0], f[1], f[2]}));
    }
    const auto& f = lv.jacobi_faults.front();
    throw StructureError("Jacobi identity fails at " + tuple1({f[0], f[1], f[2]}) +
                         " in component " + std::to_string(f[3] + 1));
  }

  PipelineResult r;
  r.manifold = M;
  r.nabla = levi_civita(M.lie, M.metric);
  for (int a = 0; a < 3; ++a)
    r.F[static_cast<std::size_t>(a)] = structural_f(M, r.nabla, a + 1);
  r.riemann = curvature(M.lie, r.nabla, M.metric);
  r.rho = ricci(r.riemann, M.metric);
  r.tau = scalar_curvature(r.rho, M.metric);
  r.lee = lee_data(M, r.F);
  r.classification = classify(M, r.F, r.lee);
  const bool in_w = r.classification.in_w;

  r.bundle = build_natural_connection(M, r.nabla, r.F);
  r.decomp = build_decomposition(M, r.riemann, r.lee, r.F);

  r.identity_suite.merge(f_identity_suite(M, r.nabla, r.F, r.riemann, r.lee));
  if (in_w) {
    r.identity_suite.merge(lee_relations_check(M, r.lee, true));
  } else {
    for (const char* name : {"lee_square_scaling", "nabla_j_norm_formula",
                             "norm_ratio_dim4", "isotropy_iff_lee_square_zero"})
      r.identity_suite.add(CheckItem::skip(name, "not a conformal-family manifold"));
  }
  r.identity_suite.merge(q_property_suite(M, r.bundle, r.F));
  if (in_w) {
    r.identity_suite.merge(w_torsion_formula(M, r.bundle, r.lee, true));
  } else {
    for (const char* name : {"torsion_theta_form", "torsion_lee_vector_annihilation"})
      r.identity_suite.add(CheckItem::skip(name, "not a conformal-family manifold"));
  }
  r.identity_suite.merge(
      k_decomposition_checks(M, r.bundle, r.decomp, r.riemann, r.lee, in_w));
  r.identity_suite.merge(r.classification.cross_checks);
  r.identity_suite.merge(w_closure_check(M, r.F));

  r.parallel_torsion = parallel_torsion_analysis(M, r.nabla, r.bundle, r.F, r.lee,
                                                 r.decomp, r.riemann, r.rho, r.tau,
                                                 in_w);
  r.conditional_checks = r.parallel_torsion.checks;
  return r;
}

}  // namespace hgman
