#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgman/example.hpp"
#include "hgman/hg.hpp"

using namespace hgman;

namespace {

Tensor neutral_metric4() {
  Tensor g(4, {Variance::down, Variance::down});
  g(0, 0) = Rational(1);
  g(1, 1) = Rational(1);
  g(2, 2) = Rational(-1);
  g(3, 3) = Rational(-1);
  return g;
}

HGManifold heisenberg_manifold() {
  return make_hg_manifold(make_lie_algebra(4, {{0, 1, 2, Rational(1)}}),
                          neutral_metric4(), standard_hypercomplex(1));
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  return contract(outer(a, b), {{1, 2}});
}

}  // namespace

TEST_CASE("standard_hypercomplex satisfies the quaternionic relations") {
  for (int n : {1, 2}) {
    const auto J = standard_hypercomplex(n);
    const int d = 4 * n;
    Tensor id(d, {Variance::up, Variance::down});
    for (int i = 0; i < d; ++i) id(i, i) = Rational(1);

    for (int a = 0; a < 3; ++a) CHECK(matmul(J[a], J[a]) == Rational(-1) * id);
    CHECK(matmul(J[0], J[1]) == J[2]);
    CHECK(matmul(J[1], J[2]) == J[0]);
    CHECK(matmul(J[2], J[0]) == J[1]);
    CHECK(matmul(J[1], J[0]) == Rational(-1) * J[2]);
  }
  CHECK_THROWS_AS(standard_hypercomplex(0), ShapeError);
}

TEST_CASE("standard_hypercomplex frozen matrix entries at n = 1") {
  const auto J = standard_hypercomplex(1);
  // J1: e1->e2, e2->-e1, e3->-e4, e4->e3
  CHECK(J[0](1, 0) == Rational(1));
  CHECK(J[0](0, 1) == Rational(-1));
  CHECK(J[0](3, 2) == Rational(-1));
  CHECK(J[0](2, 3) == Rational(1));
  // J2: e1->e3, e2->e4, e3->-e1, e4->-e2
  CHECK(J[1](2, 0) == Rational(1));
  CHECK(J[1](3, 1) == Rational(1));
  CHECK(J[1](0, 2) == Rational(-1));
  CHECK(J[1](1, 3) == Rational(-1));
  // J3: e1->-e4, e2->e3, e3->-e2, e4->e1
  CHECK(J[2](3, 0) == Rational(-1));
  CHECK(J[2](2, 1) == Rational(1));
  CHECK(J[2](1, 2) == Rational(-1));
  CHECK(J[2](0, 3) == Rational(1));
}

TEST_CASE("make_hg_manifold validates compatibility and signature") {
  const HGManifold M = heisenberg_manifold();
  CHECK(M.dim() == 4);
  CHECK(M.n() == 1);

  // associated forms: g_alpha(x,y) = g(J_alpha x, y)
  CHECK(M.g_alpha[0](0, 1) == Rational(1));
  CHECK(M.g_alpha[0](1, 0) == Rational(-1));  // Kaehler 2-form is skew
  CHECK(M.g_alpha[1](0, 2) == Rational(-1));
  CHECK(M.g_alpha[1](2, 0) == Rational(-1));  // Norden pairings are symmetric
  CHECK(M.g_alpha[2](0, 3) == Rational(1));
  const SignatureCount s2 = signature_of(M.g_alpha[1]);
  CHECK(s2.positive == 2);
  CHECK(s2.negative == 2);

  // positive-definite metric: wrong signature and wrong compatibility
  Tensor riem(4, {Variance::down, Variance::down});
  for (int i = 0; i < 4; ++i) riem(i, i) = Rational(1);
  CHECK_THROWS_AS(make_hg_manifold(make_lie_algebra(4, {}), riem,
                                   standard_hypercomplex(1)),
                  StructureError);

  // neutral but not compatible with J1
  Tensor bad(4, {Variance::down, Variance::down});
  bad(0, 0) = Rational(1);
  bad(1, 1) = Rational(2);
  bad(2, 2) = Rational(-1);
  bad(3, 3) = Rational(-2);
  CHECK_THROWS_AS(make_hg_manifold(make_lie_algebra(4, {}), bad,
                                   standard_hypercomplex(1)),
                  StructureError);

  // broken quaternionic triple (J2 and J3 swapped flips a product sign)
  auto J = standard_hypercomplex(1);
  std::swap(J[1], J[2]);
  CHECK_THROWS_AS(make_hg_manifold(make_lie_algebra(4, {}), neutral_metric4(), J),
                  StructureError);
}

TEST_CASE("compose helpers substitute J into the chosen slots") {
  const HGManifold M = heisenberg_manifold();
  Tensor t(4, {Variance::down, Variance::down, Variance::down, Variance::down});
  t(0, 1, 2, 3) = Rational(1);

  // last pair: (t o J)(x,y,z,w) = t(x,y,Jz,Jw); with J1 e4 = +e3 and
  // J1 e3 = -e4 the value lands at (0,1,3,2) with sign (+1)(-1)
  const Tensor lp = compose_last_pair(t, M.J[0]);
  CHECK(lp(0, 1, 3, 2) == Rational(-1));
  CHECK(lp(0, 1, 2, 3) == Rational(0));

  const Tensor fp = compose_first_pair(t, M.J[0]);
  CHECK(fp(1, 0, 2, 3) == Rational(-1));
  CHECK(fp(0, 1, 2, 3) == Rational(0));

  Tensor th(4, {Variance::down});
  th(0) = Rational(2);
  th(2) = Rational(3);
  const Tensor tj = compose_form(th, M.J[0]);  // (theta o J)(z) = theta(J z)
  CHECK(tj(1) == Rational(-2));                // J1 e2 = -e1
  CHECK(tj(3) == Rational(3));                 // J1 e4 = +e3
  CHECK(tj(0) == Rational(0));
}

TEST_CASE("structural tensors on the nilpotent fixture match frozen values") {
  const HGManifold M = heisenberg_manifold();
  const Connection nabla = levi_civita(M.lie, M.metric);
  std::array<Tensor, 3> F;
  for (int a = 0; a < 3; ++a) F[a] = structural_f(M, nabla, a + 1);

  CHECK(F[0](0, 0, 2) == Rational(-1, 2));
  CHECK(F[0](0, 1, 3) == Rational(-1, 2));
  CHECK(F[0](1, 2, 1) == Rational(1, 2));
  CHECK(F[1](1, 0, 0) == Rational(-1));
  CHECK(F[1](0, 0, 1) == Rational(1, 2));
  CHECK(F[2](0, 1, 1) == Rational(1));
  CHECK(F[2](2, 3, 1) == Rational(1, 2));

  int nz1 = 0;
  for (std::size_t f = 0; f < F[0].size(); ++f)
    if (F[0][f] != Rational(0)) ++nz1;
  CHECK(nz1 == 8);

  // F_alpha(x,y,z) = -eps_alpha F_alpha(x,z,y)
  for (int a = 0; a < 3; ++a) {
    const Rational eps = (a == 0) ? Rational(1) : Rational(-1);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z)
          CHECK(F[a](x, y, z) == Rational(-1) * eps * F[a](x, z, y));
  }

  CHECK_THROWS_AS(structural_f(M, nabla, 0), ShapeError);
  CHECK_THROWS_AS(structural_f(M, nabla, 4), ShapeError);
}

TEST_CASE("lee_data on the nilpotent fixture: frozen forms and disagreement") {
  const HGManifold M = heisenberg_manifold();
  const Connection nabla = levi_civita(M.lie, M.metric);
  std::array<Tensor, 3> F;
  for (int a = 0; a < 3; ++a) F[a] = structural_f(M, nabla, a + 1);
  const LeeData lee = lee_data(M, F);

  CHECK(lee.theta_alpha[0](2) == Rational(-1));
  CHECK(lee.theta_alpha[1](1) == Rational(1));
  CHECK(lee.theta_alpha[2](0) == Rational(-1));
  for (int a = 0; a < 3; ++a) {
    int nz = 0;
    for (int i = 0; i < 4; ++i)
      if (lee.theta_alpha[a](i) != Rational(0)) ++nz;
    CHECK(nz == 1);
  }

  // unified-Lee candidates: (0,0,0,2) from alpha=1 vs (0,0,0,-1) from 2 and 3
  CHECK(lee.theta_candidates[0](3) == Rational(2));
  CHECK(lee.theta_candidates[1](3) == Rational(-1));
  CHECK(lee.theta_candidates[2](3) == Rational(-1));
  CHECK_FALSE(lee.candidates_agree);
  CHECK(lee.theta == lee.theta_candidates[0]);

  CHECK(lee.theta_omega == Rational(-4));
  CHECK(lee.norms[0] == Rational(-2));
  CHECK(lee.norms[1] == Rational(4));
  CHECK(lee.norms[2] == Rational(4));

  // omega is theta with indices raised by the neutral metric
  CHECK(lee.omega(3) == Rational(-2));
  CHECK(lee.omega(0) == Rational(0));
}

TEST_CASE("f_identity_suite passes on the nilpotent fixture with gated skips") {
  const HGManifold M = heisenberg_manifold();
  const Connection nabla = levi_civita(M.lie, M.metric);
  std::array<Tensor, 3> F;
  for (int a = 0; a < 3; ++a) F[a] = structural_f(M, nabla, a + 1);
  const LeeData lee = lee_data(M, F);
  const Tensor R = curvature(M.lie, nabla, M.metric);

  const CheckReport rep = f_identity_suite(M, nabla, F, R, lee);
  CHECK(rep.all_passed());
  REQUIRE(rep.find("norden_curvature_cyclic_j2") != nullptr);
  CHECK(rep.find("norden_curvature_cyclic_j2")->status == CheckStatus::skipped);
  CHECK(rep.find("norden_curvature_cyclic_j3")->status == CheckStatus::skipped);
  CHECK(rep.find("f_skew_symmetry")->status == CheckStatus::pass);
  CHECK(rep.find("ricci_commutation")->status == CheckStatus::pass);
  CHECK(rep.find("lee_form_j1_isotropy")->status == CheckStatus::pass);
}

TEST_CASE("f_identity_suite detects a corrupted structural tensor") {
  const HGManifold M = heisenberg_manifold();
  const Connection nabla = levi_civita(M.lie, M.metric);
  std::array<Tensor, 3> F;
  for (int a = 0; a < 3; ++a) F[a] = structural_f(M, nabla, a + 1);
  const LeeData lee = lee_data(M, F);
  const Tensor R = curvature(M.lie, nabla, M.metric);

  F[0](0, 1, 2) += Rational(1);
  const CheckReport rep = f_identity_suite(M, nabla, F, R, lee);
  CHECK_FALSE(rep.all_passed());
  REQUIRE(rep.find("f_skew_symmetry") != nullptr);
  CHECK(rep.find("f_skew_symmetry")->status == CheckStatus::fail);
  CHECK_FALSE(rep.find("f_skew_symmetry")->detail.empty());
}

TEST_CASE("lee_relations_check holds on the parameter family and gates otherwise") {
  const HGManifold M = build_example_w4(
      {Rational(1), Rational(2), Rational(3), Rational(4)});
  const Connection nabla = levi_civita(M.lie, M.metric);
  std::array<Tensor, 3> F;
  for (int a = 0; a < 3; ++a) F[a] = structural_f(M, nabla, a + 1);
  const LeeData lee = lee_data(M, F);
  CHECK(lee.candidates_agree);

  const CheckReport rep = lee_relations_check(M, lee, true);
  CHECK(rep.all_passed());
  CHECK(rep.find("lee_square_scaling")->status == CheckStatus::pass);
  CHECK(rep.find("nabla_j_norm_formula")->status == CheckStatus::pass);
  CHECK(rep.find("norm_ratio_dim4")->status == CheckStatus::pass);
  CHECK(rep.find("isotropy_iff_lee_square_zero")->status == CheckStatus::pass);

  const HGManifold H = heisenberg_manifold();
  const Connection hn = levi_civita(H.lie, H.metric);
  std::array<Tensor, 3> HF;
  for (int a = 0; a < 3; ++a) HF[a] = structural_f(H, hn, a + 1);
  const LeeData hlee = lee_data(H, HF);
  CHECK_THROWS_AS(lee_relations_check(H, hlee, false), PreconditionError);
}
