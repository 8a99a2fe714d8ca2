#include "hgman/hg.hpp"

#include <optional>
#include <string>

#include "hgman/errors.hpp"

#include "detail.hpp"

namespace hgman {

using detail::antisym01;
using detail::first_mismatch;
using detail::sub_j;
using detail::tuple1;

namespace {

const std::vector<Variance> kVar11{Variance::up, Variance::down};
const std::vector<Variance> kVar03{Variance::down, Variance::down, Variance::down};
const std::vector<Variance> kVar04(4, Variance::down);

std::string at2(int i, int j) { return tuple1({i, j}); }

void check_j_shape(const Tensor& J, int dim, int alpha) {
  if (J.rank() != 2 || J.variance() != kVar11 || J.dim() != dim)
    throw ShapeError("J_" + std::to_string(alpha) + " must be a (1,1)-tensor on the frame");
}

}  // namespace

std::array<Tensor, 3> standard_hypercomplex(int n) {
  if (n < 1) throw ShapeError("standard hypercomplex structure needs n >= 1");
  const int d = 4 * n;
  // per 4-block: J e_{4k+j} = sign * e_{4k+target}
  static constexpr int target[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[3][4] = {{1, -1, -1, 1}, {1, 1, -1, -1}, {-1, 1, -1, 1}};
  std::array<Tensor, 3> J{Tensor(d, kVar11), Tensor(d, kVar11), Tensor(d, kVar11)};
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < 4; ++j) J[a](4 * k + target[a][j], 4 * k + j) = sign[a][j];
  return J;
}

HGManifold make_hg_manifold(const LieAlgebra& lie, const Tensor& g,
                            const std::array<Tensor, 3>& J) {
  const int d = lie.dim;
  if (d <= 0 || d % 4 != 0)
    throw StructureError("frame dimension must be a positive multiple of 4, got " +
                         std::to_string(d));
  if (g.dim() != d) throw ShapeError("metric dimension does not match the algebra");
  for (int a = 0; a < 3; ++a) check_j_shape(J[a], d, a + 1);

  Metric metric = Metric::from(g);

  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc;
        for (int m = 0; m < d; ++m) acc += J[a](i, m) * J[a](m, j);
        if (acc != (i == j ? Rational(-1) : Rational(0)))
          throw StructureError("J_" + std::to_string(a + 1) +
                               "^2 = -identity fails at component " + at2(i, j));
      }
  }

  // cyclic quaternionic relations J_a = J_b J_c = -J_c J_b
  static constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& abc : cyc) {
    const int a = abc[0], b = abc[1], c = abc[2];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational bc, cb;
        for (int m = 0; m < d; ++m) {
          bc += J[b](i, m) * J[c](m, j);
          cb += J[c](i, m) * J[b](m, j);
        }
        if (bc != J[a](i, j))
          throw StructureError("quaternionic relation J_" + std::to_string(a + 1) + " = J_" +
                               std::to_string(b + 1) + " J_" + std::to_string(c + 1) +
                               " fails at component " + at2(i, j));
        if (cb != -J[a](i, j))
          throw StructureError("quaternionic relation J_" + std::to_string(a + 1) + " = -J_" +
                               std::to_string(c + 1) + " J_" + std::to_string(b + 1) +
                               " fails at component " + at2(i, j));
      }
  }

  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc;
        for (int p = 0; p < d; ++p) {
          if (J[a](p, i).is_zero()) continue;
          for (int q = 0; q < d; ++q) acc += J[a](p, i) * J[a](q, j) * g(p, q);
        }
        if (acc != Rational(kEps[a]) * g(i, j))
          throw StructureError("metric compatibility g(J_" + std::to_string(a + 1) + " x, J_" +
                               std::to_string(a + 1) + " y) = " +
                               (kEps[a] > 0 ? std::string("") : std::string("-")) +
                               "g(x,y) fails at " + at2(i, j));
      }
  }

  const SignatureCount sig = signature_of(g);
  if (sig.positive != d / 2 || sig.negative != d / 2)
    throw StructureError("metric signature must be neutral (" + std::to_string(d / 2) + "," +
                         std::to_string(d / 2) + "); got (+" + std::to_string(sig.positive) +
                         ",-" + std::to_string(sig.negative) + ",0:" +
                         std::to_string(sig.zero) + ")");

  HGManifold M{lie, std::move(metric), J,
               {Tensor(d, {Variance::down, Variance::down}),
                Tensor(d, {Variance::down, Variance::down}),
                Tensor(d, {Variance::down, Variance::down})}};
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc;
        for (int m = 0; m < d; ++m) acc += J[a](m, i) * g(m, j);
        M.g_alpha[a](i, j) = acc;
      }

  // Consequences of the relations just verified; failures here are bugs.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (M.g_alpha[0](i, j) != -M.g_alpha[0](j, i))
        throw InternalError("associated form g_1 is not antisymmetric");
      for (int a = 1; a < 3; ++a)
        if (M.g_alpha[a](i, j) != M.g_alpha[a](j, i))
          throw InternalError("associated metric g_" + std::to_string(a + 1) +
                              " is not symmetric");
    }
  if (!bilinear_nondegenerate(M.g_alpha[0]))
    throw InternalError("associated form g_1 is degenerate");
  for (int a = 1; a < 3; ++a) {
    const SignatureCount sa = signature_of(M.g_alpha[a]);
    if (sa.positive != d / 2 || sa.negative != d / 2)
      throw InternalError("associated metric g_" + std::to_string(a + 1) + " is not neutral");
  }
  return M;
}

Tensor compose_last_pair(const Tensor& t, const Tensor& J) {
  if (t.rank() != 4 || t.variance() != kVar04)
    throw ShapeError("last-pair composition needs a (0,4)-tensor");
  return sub_j(sub_j(t, 2, J), 3, J);
}

Tensor compose_first_pair(const Tensor& t, const Tensor& J) {
  if (t.rank() != 4 || t.variance() != kVar04)
    throw ShapeError("first-pair composition needs a (0,4)-tensor");
  return sub_j(sub_j(t, 0, J), 1, J);
}

Tensor compose_form(const Tensor& oneform, const Tensor& J) {
  if (oneform.rank() != 1 || oneform.variance()[0] != Variance::down)
    throw ShapeError("form composition needs a 1-form");
  if (J.dim() != oneform.dim()) throw ShapeError("form composition with mismatched J");
  return sub_j(oneform, 0, J);
}

Tensor structural_f(const HGManifold& M, const Connection& nabla, int alpha) {
  if (alpha < 1 || alpha > 3) throw ShapeError("alpha must be 1, 2, or 3");
  const int d = M.dim();
  const Tensor nabJ = covariant_derivative(M.J[static_cast<std::size_t>(alpha - 1)], nabla);
  Tensor out(d, kVar03);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Rational acc;
        for (int m = 0; m < d; ++m) {
          const Rational& v = nabJ(x, m, y);
          if (v.is_zero()) continue;
          acc += v * M.metric.g(m, z);
        }
        out(x, y, z) = acc;
      }
  return out;
}

LeeData lee_data(const HGManifold& M, const std::array<Tensor, 3>& F) {
  const int d = M.dim();
  const int n = M.n();
  LeeData out;
  for (int a = 0; a < 3; ++a) {
    if (F[a].dim() != d || F[a].variance() != kVar03)
      throw ShapeError("structural tensor F must be a (0,3)-tensor on the frame");
    Tensor th(d, {Variance::down});
    for (int z = 0; z < d; ++z) {
      Rational acc;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Rational& w = M.metric.inv(i, j);
          if (w.is_zero()) continue;
          acc += w * F[a](i, j, z);
        }
      th(z) = acc;
    }
    out.theta_alpha[a] = th;
    out.omega_alpha[a] = raise_lower(th, 0, M.metric);
    const Rational coef(4 * n, 1 - kEps[a] * (4 * n - 1));
    out.theta_candidates[a] = coef * compose_form(th, M.J[a]);
  }
  out.theta = out.theta_candidates[0];
  out.omega = raise_lower(out.theta, 0, M.metric);
  out.candidates_agree = out.theta_candidates[0] == out.theta_candidates[1] &&
                         out.theta_candidates[1] == out.theta_candidates[2];
  for (int a = 0; a < 3; ++a) {
    out.theta_j[a] = compose_form(out.theta, M.J[a]);
    Tensor fup = raise_lower(raise_lower(raise_lower(F[a], 0, M.metric), 1, M.metric), 2,
                             M.metric);
    Rational norm;
    for (std::size_t f = 0; f < F[a].size(); ++f) norm += F[a][f] * fup[f];
    out.norms[a] = norm;
  }
  for (int i = 0; i < d; ++i) out.theta_omega += out.theta(i) * out.omega(i);
  for (int a = 0; a < 3; ++a) {
    Rational acc;
    for (int z = 0; z < d; ++z) acc += out.theta_j[a](z) * out.omega(z);
    out.theta_j_omega[a] = acc;
  }
  return out;
}

CheckReport f_identity_suite(const HGManifold& M, const Connection& nabla,
                             const std::array<Tensor, 3>& F, const Tensor& riemann,
                             const LeeData& lee) {
  static constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const auto& J = M.J;
  CheckReport rep;
  std::vector<int> idx;

  auto eps = [](int a) { return Rational(kEps[a]); };
  auto alpha_at = [&idx](int a) {
    return "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
  };
  auto cycle_at = [&idx](const int* abc) {
    return "cycle (" + std::to_string(abc[0] + 1) + "," + std::to_string(abc[1] + 1) + "," +
           std::to_string(abc[2] + 1) + ") at " + tuple1(idx);
  };

  {
    CheckItem item = CheckItem::passed("f_skew_symmetry");
    const int d = M.dim();
    for (int a = 0; a < 3 && item.status == CheckStatus::pass; ++a)
      for (int x = 0; x < d && item.status == CheckStatus::pass; ++x)
        for (int y = 0; y < d && item.status == CheckStatus::pass; ++y)
          for (int z = 0; z < d; ++z)
            if (F[a](x, y, z) != -eps(a) * F[a](x, z, y)) {
              idx = {x, y, z};
              item = CheckItem::failed("f_skew_symmetry", alpha_at(a));
              break;
            }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("f_j_compatibility");
    for (int a = 0; a < 3 && item.status == CheckStatus::pass; ++a) {
      const Tensor rhs = -eps(a) * sub_j(sub_j(F[a], 1, J[a]), 2, J[a]);
      if (first_mismatch(F[a], rhs, idx))
        item = CheckItem::failed("f_j_compatibility", alpha_at(a));
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("f_j_swap");
    for (int a = 0; a < 3 && item.status == CheckStatus::pass; ++a) {
      const Tensor lhs = sub_j(F[a], 1, J[a]);
      const Tensor rhs = eps(a) * sub_j(F[a], 2, J[a]);
      if (first_mismatch(lhs, rhs, idx))
        item = CheckItem::failed("f_j_swap", alpha_at(a));
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("f_cyclic_exchange");
    for (const auto& abc : cyc) {
      const int a = abc[0], b = abc[1], c = abc[2];
      const Tensor r1 = sub_j(F[b], 1, J[c]) - eps(b) * sub_j(F[c], 2, J[b]);
      const Tensor r2 = eps(c) * sub_j(F[b], 2, J[c]) - sub_j(F[c], 1, J[b]);
      if (first_mismatch(F[a], r1, idx) || first_mismatch(F[a], r2, idx)) {
        item = CheckItem::failed("f_cyclic_exchange", cycle_at(abc));
        break;
      }
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("f_pair_exchange");
    const Tensor zero(M.dim(), kVar03);
    for (const auto& abc : cyc) {
      const int b = abc[1], c = abc[2];
      const Tensor s = sub_j(F[b], 1, J[c]) - eps(c) * sub_j(F[b], 2, J[c]) +
                       sub_j(F[c], 1, J[b]) - eps(b) * sub_j(F[c], 2, J[b]);
      if (first_mismatch(s, zero, idx)) {
        item = CheckItem::failed("f_pair_exchange", cycle_at(abc));
        break;
      }
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("f_double_j_swap");
    for (const auto& abc : cyc) {
      const int a = abc[0], b = abc[1], c = abc[2];
      const Tensor l1 = sub_j(sub_j(F[a], 1, J[b]), 2, J[c]);
      const Tensor r1 = eps(a) * sub_j(sub_j(F[a], 1, J[c]), 2, J[b]);
      const Tensor l2 = sub_j(sub_j(F[a], 1, J[b]), 2, J[b]);
      const Tensor r2 = -eps(a) * sub_j(sub_j(F[a], 1, J[c]), 2, J[c]);
      if (first_mismatch(l1, r1, idx) || first_mismatch(l2, r2, idx)) {
        item = CheckItem::failed("f_double_j_swap", cycle_at(abc));
        break;
      }
    }
    rep.add(item);
  }

  std::array<Tensor, 3> nabF;
  for (int a = 0; a < 3; ++a) nabF[a] = covariant_derivative(F[a], nabla);

  {
    CheckItem item = CheckItem::passed("ricci_commutation");
    for (int a = 0; a < 3 && item.status == CheckStatus::pass; ++a) {
      const Tensor lhs = antisym01(nabF[a]);
      const Tensor rhs = sub_j(riemann, 2, J[a]) + eps(a) * sub_j(riemann, 3, J[a]);
      if (first_mismatch(lhs, rhs, idx))
        item = CheckItem::failed("ricci_commutation", alpha_at(a));
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("ricci_commutation_j");
    for (int a = 0; a < 3 && item.status == CheckStatus::pass; ++a) {
      const Tensor lhs = riemann - eps(a) * compose_last_pair(riemann, J[a]);
      const Tensor r1 = -eps(a) * antisym01(sub_j(nabF[a], 3, J[a]));
      const Tensor r2 = -antisym01(sub_j(nabF[a], 2, J[a]));
      if (first_mismatch(lhs, r1, idx) || first_mismatch(lhs, r2, idx))
        item = CheckItem::failed("ricci_commutation_j", alpha_at(a));
    }
    rep.add(item);
  }

  for (int a = 1; a < 3; ++a) {
    const std::string name = "norden_curvature_cyclic_j" + std::to_string(a + 1);
    if (!nijenhuis(J[a], M.lie).is_zero()) {
      rep.add(CheckItem::skip(name, "J_" + std::to_string(a + 1) +
                                        " not integrable (nonzero Nijenhuis tensor)"));
      continue;
    }
    const int d = M.dim();
    const Tensor nabJ = covariant_derivative(J[a], nabla);
    Tensor as(d, {Variance::down, Variance::down, Variance::up});
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int m = 0; m < d; ++m) as(x, y, m) = nabJ(x, m, y) - nabJ(y, m, x);
    Tensor asl(d, kVar03);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int l = 0; l < d; ++l) {
          Rational acc;
          for (int m = 0; m < d; ++m) acc += as(x, y, m) * M.metric.g(m, l);
          asl(x, y, l) = acc;
        }
    Tensor total = compose_first_pair(riemann, J[a]) + compose_last_pair(riemann, J[a]);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z)
          for (int w = 0; w < d; ++w) {
            Rational acc;
            for (int l = 0; l < d; ++l) acc += asl(x, y, l) * as(z, w, l);
            total(x, y, z, w) += acc;
          }
    const Tensor zero(d, kVar04);
    if (first_mismatch(cyclic_sum_first3(total), zero, idx))
      rep.add(CheckItem::failed(name, "cyclic sum nonzero at " + tuple1(idx)));
    else
      rep.add(CheckItem::passed(name));
  }

  for (int a = 1; a < 3; ++a) {
    const std::string name = "lee_pairing_cyclic_j" + std::to_string(a + 1);
    const Tensor pairing =
        outer(lee.theta, lee.theta_j[a]) + outer(lee.theta_j[a], lee.theta);
    const Tensor zero(M.dim(), kVar04);
    if (first_mismatch(cyclic_sum_first3(kulkarni_nomizu(M.g_alpha[a], pairing)), zero, idx))
      rep.add(CheckItem::failed(name, "cyclic sum nonzero at " + tuple1(idx)));
    else
      rep.add(CheckItem::passed(name));
  }

  if (lee.theta_j_omega[0].is_zero())
    rep.add(CheckItem::passed("lee_form_j1_isotropy"));
  else
    rep.add(CheckItem::failed("lee_form_j1_isotropy",
                              "theta(J_1 Omega) = " + lee.theta_j_omega[0].str()));

  return rep;
}

CheckReport lee_relations_check(const HGManifold& M, const LeeData& lee, bool in_w) {
  if (!in_w)
    throw PreconditionError(
        "Lee-form scaling relations apply only to conformal-family manifolds");
  if (!lee.candidates_agree)
    throw InternalError("unified Lee form candidates disagree on a conformal-family manifold");

  const int n = M.n();
  const int d = M.dim();
  CheckReport rep;

  {
    CheckItem item = CheckItem::passed("lee_square_scaling");
    for (int a = 0; a < 3; ++a) {
      Rational tao;  // theta_alpha(Omega_alpha)
      for (int i = 0; i < d; ++i) tao += lee.theta_alpha[a](i) * lee.omega_alpha[a](i);
      const long den = 1 - kEps[a] * (4 * n - 1);
      const Rational coef(kEps[a] * 16 * n * n, den * den);
      if (lee.theta_omega != coef * tao) {
        item = CheckItem::failed("lee_square_scaling",
                                 "alpha=" + std::to_string(a + 1) + ": theta(Omega) = " +
                                     lee.theta_omega.str() + ", scaled value = " +
                                     (coef * tao).str());
        break;
      }
    }
    rep.add(item);
  }

  {
    CheckItem item = CheckItem::passed("nabla_j_norm_formula");
    for (int a = 0; a < 3; ++a) {
      const Rational coef((4 * n - 1) * kEps[a] - 1, 4 * n * n);
      if (lee.norms[a] != coef * lee.theta_omega) {
        item = CheckItem::failed("nabla_j_norm_formula",
                                 "alpha=" + std::to_string(a + 1) + ": norm = " +
                                     lee.norms[a].str() + ", formula value = " +
                                     (coef * lee.theta_omega).str());
        break;
      }
    }
    rep.add(item);
  }

  if (n == 1) {
    if (Rational(-2) * lee.norms[0] == lee.norms[1] && lee.norms[1] == lee.norms[2])
      rep.add(CheckItem::passed("norm_ratio_dim4"));
    else
      rep.add(CheckItem::failed("norm_ratio_dim4",
                                "norms = (" + lee.norms[0].str() + ", " + lee.norms[1].str() +
                                    ", " + lee.norms[2].str() + ")"));
  } else {
    rep.add(CheckItem::skip("norm_ratio_dim4", "stated for frame dimension 4 only"));
  }

  {
    const bool isotropic =
        lee.norms[0].is_zero() && lee.norms[1].is_zero() && lee.norms[2].is_zero();
    const bool lee_square_zero = lee.theta_omega.is_zero();
    if (isotropic == lee_square_zero)
      rep.add(CheckItem::passed("isotropy_iff_lee_square_zero"));
    else
      rep.add(CheckItem::failed("isotropy_iff_lee_square_zero",
                                std::string("norms vanish: ") + (isotropic ? "yes" : "no") +
                                    ", theta(Omega) = " + lee.theta_omega.str()));
  }

  return rep;
}

}  // namespace hgman
