#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgman/classify.hpp"
#include "hgman/example.hpp"

using namespace hgman;

namespace {

struct Fixture {
  HGManifold M;
  std::array<Tensor, 3> F;
  LeeData lee;
};

Fixture build(const HGManifold& M) {
  Fixture fx{M, {}, {}};
  const Connection nabla = levi_civita(M.lie, M.metric);
  for (int a = 0; a < 3; ++a) fx.F[a] = structural_f(M, nabla, a + 1);
  fx.lee = lee_data(M, fx.F);
  return fx;
}

Fixture heisenberg() {
  Tensor g(4, {Variance::down, Variance::down});
  g(0, 0) = g(1, 1) = Rational(1);
  g(2, 2) = g(3, 3) = Rational(-1);
  return build(make_hg_manifold(make_lie_algebra(4, {{0, 1, 2, Rational(1)}}), g,
                                standard_hypercomplex(1)));
}

Fixture family(long l1, long l2, long l3, long l4) {
  return build(build_example_w4(
      {Rational(l1), Rational(l2), Rational(l3), Rational(l4)}));
}

}  // namespace

TEST_CASE("the parameter family lies in all three conformal classes") {
  const Fixture fx = family(1, 2, 3, 4);
  const ClassificationReport rep = classify(fx.M, fx.F, fx.lee);

  CHECK_FALSE(rep.in_k);
  CHECK_FALSE(rep.k_witness.empty());
  for (int a = 0; a < 3; ++a) {
    CHECK(rep.in_w_j[static_cast<std::size_t>(a)]);
    CHECK(rep.w_j_witness[static_cast<std::size_t>(a)].empty());
    CHECK(rep.integrable[static_cast<std::size_t>(a)]);
  }
  CHECK(rep.in_w);
  CHECK(rep.d_theta_zero);
  CHECK_FALSE(rep.isotropic_hk);
  CHECK(rep.cross_checks.all_passed());
  REQUIRE(rep.cross_checks.find("w_unified_f_forms") != nullptr);
  CHECK(rep.cross_checks.find("w_unified_f_forms")->status == CheckStatus::pass);
  CHECK(rep.cross_checks.find("w_implies_closed_lee_form")->status ==
        CheckStatus::pass);
}

TEST_CASE("zero parameters give a structure-parallel manifold") {
  const Fixture fx = family(0, 0, 0, 0);
  const ClassificationReport rep = classify(fx.M, fx.F, fx.lee);
  CHECK(rep.in_k);
  CHECK(rep.k_witness.empty());
  CHECK(rep.in_w);
  CHECK(rep.isotropic_hk);
  CHECK(rep.d_theta_zero);
}

TEST_CASE("balanced parameters are isotropic without being parallel") {
  const Fixture fx = family(1, 2, 2, 1);
  const ClassificationReport rep = classify(fx.M, fx.F, fx.lee);
  CHECK_FALSE(rep.in_k);
  CHECK(rep.isotropic_hk);
  CHECK(fx.lee.theta_omega == Rational(0));
  CHECK(fx.lee.norms[0] == Rational(0));
}

TEST_CASE("the nilpotent fixture lies in exactly one conformal class") {
  const Fixture fx = heisenberg();
  const ClassificationReport rep = classify(fx.M, fx.F, fx.lee);

  CHECK_FALSE(rep.in_k);
  CHECK(rep.in_w_j[0]);
  CHECK_FALSE(rep.in_w_j[1]);
  CHECK_FALSE(rep.in_w_j[2]);
  CHECK_FALSE(rep.in_w);
  CHECK_FALSE(rep.w_j_witness[1].empty());
  CHECK_FALSE(rep.w_j_witness[2].empty());
  CHECK(rep.integrable[0]);
  CHECK_FALSE(rep.integrable[1]);
  CHECK_FALSE(rep.integrable[2]);
  CHECK_FALSE(rep.integrable_witness[1].empty());
  CHECK(rep.d_theta_zero);
  // off the conformal family the cross checks are skipped, not failed
  CHECK(rep.cross_checks.all_passed());
  CHECK(rep.cross_checks.find("w_unified_f_forms")->status == CheckStatus::skipped);
}

TEST_CASE("conformal_class_membership reports a first witness when false") {
  const Fixture fx = heisenberg();
  std::string witness;
  CHECK(conformal_class_membership(fx.M, fx.F[0], 1, &witness));
  CHECK(witness.empty());
  CHECK_FALSE(conformal_class_membership(fx.M, fx.F[1], 2, &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("class membership closure holds and its violation is a defect") {
  const Fixture fx = family(1, 2, 3, 4);
  const CheckReport rep = w_closure_check(fx.M, fx.F);
  REQUIRE(rep.find("w_membership_closure") != nullptr);
  CHECK(rep.find("w_membership_closure")->status == CheckStatus::pass);
  CHECK(rep.find("w_membership_closure")->detail ==
        "memberships: J_1=yes J_2=yes J_3=yes");

  const Fixture fh = heisenberg();
  const CheckReport rh = w_closure_check(fh.M, fh.F);
  CHECK(rh.find("w_membership_closure")->detail ==
        "memberships: J_1=yes J_2=no J_3=no");

  // hand-corrupted data with two memberships intact and one broken
  // contradicts the closure theorem and must raise InternalError
  std::array<Tensor, 3> bad = fx.F;
  bad[2](0, 0, 2) += Rational(1);
  CHECK_THROWS_AS(w_closure_check(fx.M, bad), InternalError);
}
