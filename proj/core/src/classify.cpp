#include "hgman/classify.hpp"

#include <string>
#include <vector>

#include "hgman/errors.hpp"

#include "detail.hpp"

namespace hgman {

using detail::first_mismatch;
using detail::tuple1;

namespace {

const std::vector<Variance> kVar03(3, Variance::down);

/// Lee form of a single structural tensor: theta(z) = g^{ij} f(e_i,e_j,z).
Tensor lee_form_of(const HGManifold& M, const Tensor& f) {
  const int d = M.dim();
  Tensor theta(d, {Variance::down});
  for (int z = 0; z < d; ++z) {
    Rational acc;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational& iv = M.metric.inv(i, j);
        if (!iv.is_zero()) acc += iv * f(i, j, z);
      }
    theta(z) = acc;
  }
  return theta;
}

/// The closed form F_alpha must equal on a conformal-family manifold.
Tensor class_form(const HGManifold& M, const Tensor& theta, int alpha) {
  const int d = M.dim();
  const int n = M.n();
  const auto ai = static_cast<std::size_t>(alpha - 1);
  const Tensor& g = M.metric.g;
  const Tensor& J = M.J[ai];
  const Tensor theta_j = compose_form(theta, J);
  Tensor out(d, kVar03);
  if (alpha == 1) {
    const Rational c(1, 2L * (2 * n - 1));
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          Rational acc = g(x, y) * theta(z) - g(x, z) * theta(y);
          Rational jy, jz;
          for (int p = 0; p < d; ++p) {
            if (!J(p, y).is_zero()) jy += g(x, p) * J(p, y);
            if (!J(p, z).is_zero()) jz += g(x, p) * J(p, z);
          }
          acc += -jy * theta_j(z) + jz * theta_j(y);
          out(x, y, z) = c * acc;
        }
  } else {
    const Rational c(1, 4L * n);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          Rational acc = g(x, y) * theta(z) + g(x, z) * theta(y);
          Rational jy, jz;
          for (int p = 0; p < d; ++p) {
            if (!J(p, y).is_zero()) jy += g(x, p) * J(p, y);
            if (!J(p, z).is_zero()) jz += g(x, p) * J(p, z);
          }
          acc += jy * theta_j(z) + jz * theta_j(y);
          out(x, y, z) = c * acc;
        }
  }
  return out;
}

}  // namespace

bool conformal_class_membership(const HGManifold& M, const Tensor& f, int alpha,
                                std::string* witness) {
  if (alpha < 1 || alpha > 3) throw ShapeError("alpha must be 1, 2 or 3");
  if (f.rank() != 3 || f.variance() != kVar03 || f.dim() != M.dim())
    throw ShapeError("structural tensor must be (0,3) on the manifold frame");
  const Tensor theta = lee_form_of(M, f);
  const Tensor expected = class_form(M, theta, alpha);
  std::vector<int> idx;
  if (first_mismatch(f, expected, idx)) {
    if (witness) *witness = "at " + tuple1(idx);
    return false;
  }
  if (witness) witness->clear();
  return true;
}

ClassificationReport classify(const HGManifold& M, const std::array<Tensor, 3>& F,
                              const LeeData& lee) {
  const int d = M.dim();
  ClassificationReport out;
  std::vector<int> idx;

  out.in_k = true;
  for (int a = 0; a < 3 && out.in_k; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    if (!F[ai].is_zero()) {
      out.in_k = false;
      first_mismatch(F[ai], Tensor(d, kVar03), idx);
      out.k_witness = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
    }
  }

  out.in_w = true;
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    out.in_w_j[ai] = conformal_class_membership(M, F[ai], a + 1, &out.w_j_witness[ai]);
    out.in_w = out.in_w && out.in_w_j[ai];
  }

  out.isotropic_hk = true;
  for (const Rational& nrm : lee.norms)
    out.isotropic_hk = out.isotropic_hk && nrm.is_zero();

  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    const Tensor nij = nijenhuis(M.J[ai], M.lie);
    out.integrable[ai] = nij.is_zero();
    if (!out.integrable[ai]) {
      first_mismatch(nij, Tensor(d, nij.variance()), idx);
      out.integrable_witness[ai] = "at " + tuple1(idx);
    }
  }

  const Tensor dtheta = exterior_d(lee.theta, M.lie);
  out.d_theta_zero = dtheta.is_zero();
  if (!out.d_theta_zero) {
    first_mismatch(dtheta, Tensor(d, dtheta.variance()), idx);
    out.d_theta_witness = "at " + tuple1(idx);
  }

  if (out.in_w) {
    // All three structural tensors reduce to one display in the unified Lee
    // form; verified componentwise.
    bool ok = true;
    std::string detail;
    const Tensor& g = M.metric.g;
    const Rational quarter(1, 4);
    for (int a = 0; a < 3 && ok; ++a) {
      const auto ai = static_cast<std::size_t>(a);
      const Tensor& J = M.J[ai];
      const Rational eps(kEps[ai]);
      const Tensor thJ = compose_form(lee.theta, J);
      Tensor expected(d, kVar03);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          for (int z = 0; z < d; ++z) {
            Rational acc = eps * g(x, y) * thJ(z) - g(x, z) * thJ(y);
            Rational jx_y, jx_z;
            for (int p = 0; p < d; ++p) {
              const Rational& jv = J(p, x);
              if (jv.is_zero()) continue;
              jx_y += jv * g(p, y);
              jx_z += jv * g(p, z);
            }
            acc += -eps * jx_y * lee.theta(z) + jx_z * lee.theta(y);
            expected(x, y, z) = quarter * acc;
          }
      if (first_mismatch(F[ai], expected, idx)) {
        ok = false;
        detail = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
      }
    }
    out.cross_checks.add(ok ? CheckItem::passed("w_unified_f_forms")
                            : CheckItem::failed("w_unified_f_forms", detail));
  } else {
    out.cross_checks.add(
        CheckItem::skip("w_unified_f_forms", "not a conformal-family manifold"));
  }

  if (out.in_w) {
    if (out.d_theta_zero)
      out.cross_checks.add(CheckItem::passed("w_implies_closed_lee_form"));
    else
      out.cross_checks.add(
          CheckItem::failed("w_implies_closed_lee_form", out.d_theta_witness));
  } else {
    out.cross_checks.add(CheckItem::skip("w_implies_closed_lee_form",
                                         "not a conformal-family manifold"));
  }

  return out;
}

CheckReport w_closure_check(const HGManifold& M, const std::array<Tensor, 3>& F) {
  std::array<bool, 3> member{};
  for (int a = 0; a < 3; ++a)
    member[static_cast<std::size_t>(a)] =
        conformal_class_membership(M, F[static_cast<std::size_t>(a)], a + 1, nullptr);
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(b)] &&
        !member[static_cast<std::size_t>(c)])
      throw InternalError(
          "conformal-class closure violated: memberships hold for J_" +
          std::to_string(a + 1) + " and J_" + std::to_string(b + 1) +
          " but fail for J_" + std::to_string(c + 1));
  }
  CheckReport report;
  std::string flags = "memberships:";
  for (int a = 0; a < 3; ++a)
    flags += std::string(" J_") + std::to_string(a + 1) + "=" +
             (member[static_cast<std::size_t>(a)] ? "yes" : "no");
  report.add(CheckItem{"w_membership_closure", CheckStatus::pass, flags});
  return report;
}

}  // namespace hgman
