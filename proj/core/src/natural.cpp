#include "hgman/natural.hpp"

#include <string>
#include <vector>

#include "hgman/errors.hpp"

#include "detail.hpp"

namespace hgman {

using detail::antisym01;
using detail::first_mismatch;
using detail::sub_j;
using detail::tuple1;

namespace {

const std::vector<Variance> kVarDDU{Variance::down, Variance::down, Variance::up};
const std::vector<Variance> kVar03(3, Variance::down);
const std::vector<Variance> kVar04(4, Variance::down);

void check_structural_shapes(const HGManifold& M, const std::array<Tensor, 3>& F) {
  for (const Tensor& f : F)
    if (f.rank() != 3 || f.variance() != kVar03 || f.dim() != M.dim())
      throw ShapeError("structural tensors must be (0,3) on the manifold frame");
}

/// t + sum_alpha eps_alpha * t(.,.,J_alpha .,J_alpha .) for a (0,4)-tensor.
Tensor eps_twisted_sum(const Tensor& t, const HGManifold& M) {
  Tensor out = t;
  for (int a = 0; a < 3; ++a)
    out += Rational(kEps[static_cast<std::size_t>(a)]) *
           compose_last_pair(t, M.J[static_cast<std::size_t>(a)]);
  return out;
}

/// ((nabla_x J_alpha)(J_alpha z))^m for each alpha, slots (x,z,m), built from
/// the lowered structural tensor.
std::array<Tensor, 3> twisted_nabla_j(const HGManifold& M, const std::array<Tensor, 3>& F) {
  const int d = M.dim();
  std::array<Tensor, 3> gg;
  for (int a = 0; a < 3; ++a) {
    const Tensor nj = raise_lower(F[static_cast<std::size_t>(a)], 2, M.metric);
    const Tensor& J = M.J[static_cast<std::size_t>(a)];
    Tensor out(d, kVarDDU);
    for (int x = 0; x < d; ++x)
      for (int z = 0; z < d; ++z) {
        for (int p = 0; p < d; ++p) {
          const Rational& jv = J(p, z);
          if (jv.is_zero()) continue;
          for (int m = 0; m < d; ++m) {
            const Rational& nv = nj(x, p, m);
            if (!nv.is_zero()) out(x, z, m) += jv * nv;
          }
        }
      }
    gg[static_cast<std::size_t>(a)] = std::move(out);
  }
  return gg;
}

void require_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace

NaturalConnectionBundle build_natural_connection(const HGManifold& M,
                                                 const Connection& nabla,
                                                 const std::array<Tensor, 3>& F) {
  const int d = M.dim();
  check_structural_shapes(M, F);
  if (nabla.gamma.dim() != d || nabla.gamma.variance() != kVarDDU)
    throw ShapeError("connection coefficients must be (down,down,up) on the frame");

  NaturalConnectionBundle b;

  const std::array<Tensor, 3> gg = twisted_nabla_j(M, F);
  b.q_vec = Tensor(d, kVarDDU);
  const Rational quarter(1, 4);
  for (int a = 0; a < 3; ++a) b.q_vec += quarter * gg[static_cast<std::size_t>(a)];
  b.q = raise_lower(b.q_vec, 2, M.metric);

  // Independent route to the lowered potential, straight from the structural
  // tensors: q(x,y,z) = 1/4 sum_alpha F_alpha(x, J_alpha y, z).
  Tensor q_check(d, kVar03);
  for (int a = 0; a < 3; ++a)
    q_check += quarter * sub_j(F[static_cast<std::size_t>(a)], 1,
                               M.J[static_cast<std::size_t>(a)]);
  require_internal(b.q == q_check,
                   "natural-connection potential disagrees between its defining "
                   "formula and the structural-tensor route");

  b.d = Connection{nabla.gamma + b.q_vec};
  b.torsion_vec = antisym01(b.q_vec);
  b.torsion = antisym01(b.q);
  require_internal(b.torsion_vec == torsion_vector(M.lie, b.d),
                   "torsion of the natural connection disagrees with the "
                   "antisymmetrized potential");

  require_internal(covariant_derivative(M.metric.g, b.d).is_zero(),
                   "natural connection fails to parallelize the metric");
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    const std::string tag = "J_" + std::to_string(a + 1);
    require_internal(covariant_derivative(M.J[ai], b.d).is_zero(),
                     "natural connection fails to parallelize " + tag);
    require_internal(covariant_derivative(M.g_alpha[ai], b.d).is_zero(),
                     "natural connection fails to parallelize the associated form of " + tag);
  }

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z <= y; ++z)
        require_internal(b.q(x, y, z) == -b.q(x, z, y),
                         "natural-connection potential is not skew in its last "
                         "two arguments at " + tuple1({x, y, z}));

  b.k = curvature(M.lie, b.d, M.metric);
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    require_internal(compose_last_pair(b.k, M.J[ai]) == Rational(kEps[ai]) * b.k,
                     "natural curvature is not eps-reflected by J_" + std::to_string(a + 1));
  }
  return b;
}

CheckReport q_property_suite(const HGManifold& M, const NaturalConnectionBundle& bundle,
                             const std::array<Tensor, 3>& F) {
  const int d = M.dim();
  check_structural_shapes(M, F);
  CheckReport report;
  const Tensor& q = bundle.q;
  const Tensor& T = bundle.torsion;
  std::vector<int> idx;

  {
    Tensor swapped(d, kVar03);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) swapped(x, y, z) = -q(x, z, y);
    if (first_mismatch(q, swapped, idx))
      report.add(CheckItem::failed("q_antisym_last_pair", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("q_antisym_last_pair"));
  }

  {
    Tensor rhs(d, kVar03);
    const Rational half(1, 2);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z)
          rhs(x, y, z) = half * (T(x, y, z) - T(y, z, x) + T(z, x, y));
    if (first_mismatch(q, rhs, idx))
      report.add(CheckItem::failed("q_from_torsion", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("q_from_torsion"));
  }

  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < 3 && ok; ++a) {
      const auto ai = static_cast<std::size_t>(a);
      const Tensor rhs = -(sub_j(q, 1, M.J[ai]) + Rational(kEps[ai]) * sub_j(q, 2, M.J[ai]));
      if (first_mismatch(F[ai], rhs, idx)) {
        ok = false;
        detail = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
      }
    }
    report.add(ok ? CheckItem::passed("f_from_q") : CheckItem::failed("f_from_q", detail));
  }

  {
    Tensor total = q;
    for (int a = 0; a < 3; ++a) {
      const auto ai = static_cast<std::size_t>(a);
      total += Rational(kEps[ai]) * sub_j(sub_j(q, 1, M.J[ai]), 2, M.J[ai]);
    }
    if (first_mismatch(total, Tensor(d, kVar03), idx))
      report.add(CheckItem::failed("q_j_sum_zero", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("q_j_sum_zero"));
  }

  return report;
}

CheckReport w_torsion_formula(const HGManifold& M, const NaturalConnectionBundle& bundle,
                              const LeeData& lee, bool in_w) {
  if (!in_w)
    throw PreconditionError(
        "torsion closed form requires a conformal-family manifold");
  const int d = M.dim();
  const int n = M.n();
  CheckReport report;
  const Tensor& T = bundle.torsion;
  const Tensor& g = M.metric.g;
  const Tensor& th = lee.theta;
  std::vector<int> idx;

  {
    Tensor rhs(d, kVar03);
    const Rational coef(1, 16L * n);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          Rational acc = Rational(-2) * M.g_alpha[0](x, y) * lee.theta_j[0](z);
          acc += Rational(3) * (g(x, z) * th(y) - g(y, z) * th(x));
          for (int a = 0; a < 3; ++a) {
            const auto ai = static_cast<std::size_t>(a);
            acc += M.g_alpha[ai](x, z) * lee.theta_j[ai](y) -
                   M.g_alpha[ai](y, z) * lee.theta_j[ai](x);
          }
          rhs(x, y, z) = coef * acc;
        }
    if (first_mismatch(T, rhs, idx)) {
      const Tensor diff = T - rhs;
      report.add(CheckItem::failed(
          "torsion_theta_form", "residual (computed torsion minus closed form) at " +
                                    tuple1(idx) + " = " + diff.at(idx).str()));
    } else {
      report.add(CheckItem::passed("torsion_theta_form"));
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < d && ok; ++x)
      for (int y = 0; y < d && ok; ++y) {
        Rational acc;
        for (int z = 0; z < d; ++z) acc += T(x, y, z) * lee.omega(z);
        if (!acc.is_zero()) {
          ok = false;
          detail = "T(x,y,Lee vector) = " + acc.str() + " at " + tuple1({x, y});
        }
      }
    report.add(ok ? CheckItem::passed("torsion_lee_vector_annihilation")
                  : CheckItem::failed("torsion_lee_vector_annihilation", detail));
  }

  return report;
}

DecompositionTensors build_decomposition(const HGManifold& M, const Tensor& riemann,
                                         const LeeData& lee,
                                         const std::array<Tensor, 3>& F) {
  const int d = M.dim();
  const long n = M.n();
  check_structural_shapes(M, F);
  if (riemann.rank() != 4 || riemann.variance() != kVar04 || riemann.dim() != d)
    throw ShapeError("curvature must be a (0,4)-tensor on the manifold frame");

  DecompositionTensors out;

  // P: the quadratic nabla-J potential. gg[a](x,z,.) = (nabla_x J_a)(J_a z);
  // ggl is the same with the value slot lowered.
  {
    const std::array<Tensor, 3> gg = twisted_nabla_j(M, F);
    std::array<Tensor, 3> ggl;
    for (int a = 0; a < 3; ++a)
      ggl[static_cast<std::size_t>(a)] =
          raise_lower(gg[static_cast<std::size_t>(a)], 2, M.metric);
    out.P = Tensor(d, kVar04);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Rational coeff = (a == b) ? Rational(-3) : Rational(1);
        const Tensor& left = ggl[static_cast<std::size_t>(a)];
        const Tensor& right = gg[static_cast<std::size_t>(b)];
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
              for (int w = 0; w < d; ++w) {
                Rational acc;
                for (int l = 0; l < d; ++l) {
                  const Rational& rv = right(y, w, l);
                  if (!rv.is_zero()) acc += left(x, z, l) * rv;
                  const Rational& rv2 = right(x, w, l);
                  if (!rv2.is_zero()) acc -= left(y, z, l) * rv2;
                }
                if (!acc.is_zero()) out.P(x, y, z, w) += coeff * acc;
              }
      }
  }

  const Tensor& g = M.metric.g;
  const Tensor& th = lee.theta;
  const std::array<Tensor, 3>& thJ = lee.theta_j;
  const Rational& tOm = lee.theta_omega;

  out.B = Rational(3) * outer(th, th);
  for (int a = 0; a < 3; ++a)
    out.B += outer(thJ[static_cast<std::size_t>(a)], thJ[static_cast<std::size_t>(a)]);
  out.B -= Rational(3, 2) * tOm * g;
  out.B -= Rational(1, 2) * lee.theta_j_omega[1] * M.g_alpha[1];
  out.B -= Rational(1, 2) * lee.theta_j_omega[2] * M.g_alpha[2];

  out.A = -outer(th, th);
  for (int a = 0; a < 3; ++a)
    out.A += outer(thJ[static_cast<std::size_t>(a)], thJ[static_cast<std::size_t>(a)]);
  out.A -= tOm * g;
  out.A -= lee.theta_j_omega[1] * M.g_alpha[1];
  out.A -= lee.theta_j_omega[2] * M.g_alpha[2];

  out.C = out.A + out.B;
  {
    // The combined tensor also has a direct expression; both must agree.
    Tensor direct = Rational(2) * outer(th, th);
    for (int a = 0; a < 3; ++a)
      direct += Rational(2) * outer(thJ[static_cast<std::size_t>(a)],
                                    thJ[static_cast<std::size_t>(a)]);
    direct -= Rational(5, 2) * tOm * g;
    direct -= Rational(3, 2) * lee.theta_j_omega[1] * M.g_alpha[1];
    direct -= Rational(3, 2) * lee.theta_j_omega[2] * M.g_alpha[2];
    require_internal(out.C == direct,
                     "combined Lee-square tensor disagrees with its direct expression");
  }

  out.E = outer(th, thJ[0]) - outer(thJ[0], th) - outer(thJ[1], thJ[2]) +
          outer(thJ[2], thJ[1]);
  out.U = outer(M.g_alpha[0], out.E);

  const Rational inv64(1, 64 * n * n);
  const Rational inv128(1, 128 * n * n);
  out.V = kulkarni_nomizu(g, out.B) + Rational(1, 2) * out.U;
  out.W = kulkarni_nomizu(g, out.C) + Rational(1, 2) * out.U;
  out.S = riemann + inv64 * kulkarni_nomizu(g, out.B);
  out.S_hat = out.S + inv128 * out.U;
  out.L = riemann + inv64 * kulkarni_nomizu(g, out.A);

  // Built-in symmetries, all exact consequences of the construction.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      require_internal(out.A(i, j) == out.A(j, i) && out.B(i, j) == out.B(j, i) &&
                           out.C(i, j) == out.C(j, i),
                       "Lee-square tensor lost symmetry at " + tuple1({i, j}));
      require_internal(out.E(i, j) == -out.E(j, i),
                       "Lee pairing tensor lost skewness at " + tuple1({i, j}));
    }

  const auto both_pairs_skew = [&](const Tensor& t, const std::string& what) {
    for (int x = 0; x < d; ++x)
      for (int y = 0; y <= x; ++y)
        for (int z = 0; z < d; ++z)
          for (int w = 0; w <= z; ++w) {
            require_internal(t(x, y, z, w) == -t(y, x, z, w),
                             what + " lost first-pair skewness at " + tuple1({x, y, z, w}));
            require_internal(t(x, y, z, w) == -t(x, y, w, z),
                             what + " lost last-pair skewness at " + tuple1({x, y, z, w}));
          }
  };
  both_pairs_skew(out.U, "U");
  both_pairs_skew(out.V, "V");
  both_pairs_skew(out.W, "W");
  for (int a = 0; a < 3; ++a) {
    const auto ai = static_cast<std::size_t>(a);
    require_internal(compose_last_pair(out.U, M.J[ai]) == Rational(kEps[ai]) * out.U,
                     "U lost its eps-reflection under J_" + std::to_string(a + 1));
  }
  const auto curvature_like = [&](const Tensor& t, const std::string& what) {
    both_pairs_skew(t, what);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z)
          for (int w = 0; w < d; ++w)
            require_internal(t(x, y, z, w) == t(z, w, x, y),
                             what + " lost pair-exchange symmetry at " + tuple1({x, y, z, w}));
    require_internal(cyclic_sum_first3(t).is_zero(),
                     what + " lost the first Bianchi identity");
  };
  curvature_like(out.S, "S");
  curvature_like(out.L, "L");

  return out;
}

CheckReport k_decomposition_checks(const HGManifold& M,
                                   const NaturalConnectionBundle& bundle,
                                   const DecompositionTensors& decomp,
                                   const Tensor& riemann, const LeeData& lee,
                                   bool in_w) {
  const long n = M.n();
  CheckReport report;
  std::vector<int> idx;

  {
    const Tensor rhs = Rational(1, 4) * eps_twisted_sum(riemann, M) +
                       Rational(1, 16) * decomp.P;
    if (first_mismatch(bundle.k, rhs, idx))
      report.add(CheckItem::failed("curvature_decomposition", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("curvature_decomposition"));
  }

  {
    const Rational lhs = trace4(decomp.W, M.metric);
    const Rational rhs = Rational(20 * n * (4 * n - 1)) * lee.theta_omega;
    if (lhs == rhs)
      report.add(CheckItem::passed("w_trace_formula"));
    else
      report.add(CheckItem::failed("w_trace_formula",
                                   "trace = " + lhs.str() + ", expected " + rhs.str()));
  }

  if (in_w) {
    const Tensor rhs = Rational(1, 16 * n * n) * eps_twisted_sum(decomp.V, M);
    if (first_mismatch(decomp.P, rhs, idx))
      report.add(CheckItem::failed("potential_theta_form", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("potential_theta_form"));
  } else {
    report.add(CheckItem::skip("potential_theta_form",
                               "not a conformal-family manifold"));
  }

  if (in_w) {
    const Tensor rhs = Rational(1, 4) * eps_twisted_sum(decomp.S_hat, M);
    if (first_mismatch(bundle.k, rhs, idx))
      report.add(CheckItem::failed("curvature_s_form", "at " + tuple1(idx)));
    else
      report.add(CheckItem::passed("curvature_s_form"));
  } else {
    report.add(CheckItem::skip("curvature_s_form", "not a conformal-family manifold"));
  }

  return report;
}

ParallelTorsionReport parallel_torsion_analysis(
    const HGManifold& M, const Connection& nabla,
    const NaturalConnectionBundle& bundle, const std::array<Tensor, 3>& F,
    const LeeData& lee, const DecompositionTensors& decomp, const Tensor& riemann,
    const Tensor& rho, const Rational& tau, bool in_w) {
  const int d = M.dim();
  const long n = M.n();
  check_structural_shapes(M, F);
  ParallelTorsionReport out;
  std::vector<int> idx;

  out.torsion_parallel = covariant_derivative(bundle.torsion, bundle.d).is_zero();
  bool df_zero = true;
  for (int a = 0; a < 3; ++a)
    df_zero = df_zero &&
              covariant_derivative(F[static_cast<std::size_t>(a)], bundle.d).is_zero();
  out.structural_parallel = df_zero;
  out.lee_parallel = covariant_derivative(lee.theta, bundle.d).is_zero();

  require_internal(out.torsion_parallel == out.structural_parallel,
                   "parallel torsion and parallel structural tensors must be "
                   "equivalent, yet the flags disagree");
  out.checks.add(CheckItem::passed("torsion_parallel_iff_structural_parallel"));

  if (in_w) {
    require_internal(out.torsion_parallel == out.lee_parallel,
                     "on a conformal-family manifold parallel torsion and a "
                     "parallel Lee form must be equivalent, yet the flags disagree");
    out.checks.add(CheckItem::passed("torsion_parallel_iff_lee_parallel"));
  } else {
    out.checks.add(CheckItem::skip("torsion_parallel_iff_lee_parallel",
                                   "unified Lee form is canonical only on "
                                   "conformal-family manifolds"));
  }

  const std::string skip_dt = "torsion not parallel";
  const std::string skip_w = "not a conformal-family manifold";
  const bool gate_w = out.torsion_parallel && in_w;
  const auto w_skip_reason = [&] { return out.torsion_parallel ? skip_w : skip_dt; };

  // nabla F expressed through the potential; needs only parallel torsion.
  if (out.torsion_parallel) {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < 3 && ok; ++a) {
      const auto ai = static_cast<std::size_t>(a);
      const Tensor nabF = covariant_derivative(F[ai], nabla);
      Tensor rhs(d, std::vector<Variance>(4, Variance::down));
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          for (int z = 0; z < d; ++z)
            for (int w = 0; w < d; ++w) {
              Rational acc;
              for (int m = 0; m < d; ++m) {
                const Rational& q1 = bundle.q_vec(x, y, m);
                if (!q1.is_zero()) acc += q1 * F[ai](m, z, w);
                const Rational& q2 = bundle.q_vec(x, z, m);
                if (!q2.is_zero()) acc += q2 * F[ai](y, m, w);
                const Rational& q3 = bundle.q_vec(x, w, m);
                if (!q3.is_zero()) acc += q3 * F[ai](y, z, m);
              }
              rhs(x, y, z, w) = acc;
            }
      if (first_mismatch(nabF, rhs, idx)) {
        ok = false;
        detail = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
      }
    }
    out.checks.add(ok ? CheckItem::passed("f_derivative_potential_form")
                      : CheckItem::failed("f_derivative_potential_form", detail));
  } else {
    out.checks.add(CheckItem::skip("f_derivative_potential_form", skip_dt));
  }

  const Tensor gA = kulkarni_nomizu(M.metric.g, decomp.A);

  if (gate_w) {
    bool ok = true;
    std::string detail;
    const Rational coef(-1, 64 * n * n);
    for (int a = 0; a < 3 && ok; ++a) {
      const auto ai = static_cast<std::size_t>(a);
      const Rational eps(kEps[ai]);
      const Tensor lhs = riemann - eps * compose_last_pair(riemann, M.J[ai]);
      const Tensor rhs = coef * (gA - eps * compose_last_pair(gA, M.J[ai]));
      if (first_mismatch(lhs, rhs, idx)) {
        ok = false;
        detail = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
      }
    }
    out.checks.add(ok ? CheckItem::passed("curvature_j_reflection_form")
                      : CheckItem::failed("curvature_j_reflection_form", detail));
  } else {
    out.checks.add(CheckItem::skip("curvature_j_reflection_form", w_skip_reason()));
  }

  const auto zero_tensor_item = [&](const std::string& name, const Tensor& t) {
    if (t.is_zero()) {
      out.checks.add(CheckItem::passed(name));
    } else {
      first_mismatch(t, Tensor(t.dim(), t.variance()), idx);
      out.checks.add(CheckItem::failed(name, "nonzero at " + tuple1(idx)));
    }
  };

  if (gate_w)
    zero_tensor_item("l_tensor_vanishes", decomp.L);
  else
    out.checks.add(CheckItem::skip("l_tensor_vanishes", w_skip_reason()));

  if (gate_w)
    zero_tensor_item("w_tensor_vanishes", decomp.W);
  else
    out.checks.add(CheckItem::skip("w_tensor_vanishes", w_skip_reason()));

  if (gate_w)
    zero_tensor_item("natural_connection_flat", bundle.k);
  else
    out.checks.add(CheckItem::skip("natural_connection_flat", w_skip_reason()));

  if (out.torsion_parallel && bundle.k.is_zero()) {
    bool ok = true;
    std::string detail;
    const Tensor& Tv = bundle.torsion_vec;
    for (int x = 0; x < d && ok; ++x)
      for (int y = 0; y < d && ok; ++y)
        for (int z = 0; z < d && ok; ++z)
          for (int k = 0; k < d && ok; ++k) {
            Rational acc;
            for (int m = 0; m < d; ++m) {
              acc += Tv(x, y, m) * Tv(m, z, k);
              acc += Tv(y, z, m) * Tv(m, x, k);
              acc += Tv(z, x, m) * Tv(m, y, k);
            }
            if (!acc.is_zero()) {
              ok = false;
              detail = "at " + tuple1({x, y, z, k});
            }
          }
    out.checks.add(ok ? CheckItem::passed("torsion_jacobi")
                      : CheckItem::failed("torsion_jacobi", detail));
  } else {
    out.checks.add(CheckItem::skip(
        "torsion_jacobi", out.torsion_parallel ? "natural connection not flat" : skip_dt));
  }

  if (gate_w) {
    if (lee.theta_omega.is_zero())
      out.checks.add(CheckItem::passed("lee_square_vanishes"));
    else
      out.checks.add(CheckItem::failed("lee_square_vanishes",
                                       "theta(Omega) = " + lee.theta_omega.str()));
  } else {
    out.checks.add(CheckItem::skip("lee_square_vanishes", w_skip_reason()));
  }

  if (gate_w) {
    if (tau.is_zero())
      out.checks.add(CheckItem::passed("scalar_curvature_vanishes"));
    else
      out.checks.add(
          CheckItem::failed("scalar_curvature_vanishes", "tau = " + tau.str()));
  } else {
    out.checks.add(CheckItem::skip("scalar_curvature_vanishes", w_skip_reason()));
  }

  if (gate_w) {
    const Tensor rhs = Rational(-1, 64 * n * n) * gA;
    if (first_mismatch(riemann, rhs, idx))
      out.checks.add(CheckItem::failed("curvature_theta_form", "at " + tuple1(idx)));
    else
      out.checks.add(CheckItem::passed("curvature_theta_form"));
  } else {
    out.checks.add(CheckItem::skip("curvature_theta_form", w_skip_reason()));
  }

  if (gate_w) {
    const Tensor rhs = Rational(2 * n - 1, 32 * n * n) * decomp.A;
    if (first_mismatch(rho, rhs, idx))
      out.checks.add(CheckItem::failed("ricci_theta_form", "at " + tuple1(idx)));
    else
      out.checks.add(CheckItem::passed("ricci_theta_form"));
  } else {
    out.checks.add(CheckItem::skip("ricci_theta_form", w_skip_reason()));
  }

  if (gate_w) {
    const Tensor nabR = covariant_derivative(riemann, nabla);
    const Tensor nabRho = covariant_derivative(rho, nabla);
    const Rational coef(1, 2 * (1 - 2 * n));
    bool ok = true;
    std::string detail;
    const std::vector<Variance> kVar02(2, Variance::down);
    for (int u = 0; u < d && ok; ++u) {
      Tensor slice(d, kVar02);
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) slice(y, z) = nabRho(u, y, z);
      const Tensor kn = kulkarni_nomizu(M.metric.g, slice);
      for (int x = 0; x < d && ok; ++x)
        for (int y = 0; y < d && ok; ++y)
          for (int z = 0; z < d && ok; ++z)
            for (int w = 0; w < d && ok; ++w)
              if (nabR(u, x, y, z, w) != coef * kn(x, y, z, w)) {
                ok = false;
                detail = "at " + tuple1({u, x, y, z, w});
              }
    }
    out.checks.add(ok ? CheckItem::passed("second_bianchi_ricci_form")
                      : CheckItem::failed("second_bianchi_ricci_form", detail));
  } else {
    out.checks.add(CheckItem::skip("second_bianchi_ricci_form", w_skip_reason()));
  }

  if (out.lee_parallel) {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < 3 && ok; ++a) {
      const Tensor dthj =
          covariant_derivative(lee.theta_j[static_cast<std::size_t>(a)], bundle.d);
      if (first_mismatch(dthj, Tensor(d, dthj.variance()), idx)) {
        ok = false;
        detail = "alpha=" + std::to_string(a + 1) + " at " + tuple1(idx);
      }
    }
    out.checks.add(ok ? CheckItem::passed("parallel_composed_lee_forms")
                      : CheckItem::failed("parallel_composed_lee_forms", detail));
  } else {
    out.checks.add(
        CheckItem::skip("parallel_composed_lee_forms", "unified Lee form not parallel"));
  }

  return out;
}

}  // namespace hgman
