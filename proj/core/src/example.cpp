#include "hgman/example.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgman/errors.hpp"

#include "detail.hpp"

namespace hgman {

using detail::tuple1;

namespace {

const std::vector<Variance> kVarDDU{Variance::down, Variance::down, Variance::up};
const std::vector<Variance> kVar03(3, Variance::down);
const std::vector<Variance> kVar04(4, Variance::down);

/// One published component: value = coeff * lambda_{lam} at 1-based indices.
struct TableEntry {
  int x, y, z;
  int coeff;
  int lam;
};

// The three structural-tensor tables of the family, transcribed once from
// the published display; every other component vanishes.
const std::vector<TableEntry> kF1{
    {1, 1, 3, 1, 1},  {1, 2, 4, 1, 1},  {1, 3, 1, -1, 1}, {1, 4, 2, -1, 1},
    {2, 1, 4, -1, 1}, {2, 2, 3, 1, 1},  {2, 3, 2, -1, 1}, {2, 4, 1, 1, 1},
    {1, 1, 4, -1, 2}, {1, 2, 3, 1, 2},  {1, 3, 2, -1, 2}, {1, 4, 1, 1, 2},
    {2, 1, 3, -1, 2}, {2, 2, 4, -1, 2}, {2, 3, 1, 1, 2},  {2, 4, 2, 1, 2},
    {3, 1, 3, 1, 3},  {3, 2, 4, 1, 3},  {3, 3, 1, -1, 3}, {3, 4, 2, -1, 3},
    {4, 1, 4, 1, 3},  {4, 2, 3, -1, 3}, {4, 3, 2, 1, 3},  {4, 4, 1, -1, 3},
    {3, 1, 4, 1, 4},  {3, 2, 3, -1, 4}, {3, 3, 2, 1, 4},  {3, 4, 1, -1, 4},
    {4, 1, 3, -1, 4}, {4, 2, 4, -1, 4}, {4, 3, 1, 1, 4},  {4, 4, 2, 1, 4},
};

const std::vector<TableEntry> kF2{
    {1, 1, 2, 1, 1},  {1, 2, 1, 1, 1},  {1, 3, 4, 1, 1},  {1, 4, 3, 1, 1},
    {2, 2, 2, 2, 1},  {2, 4, 4, 2, 1},
    {3, 1, 4, 1, 1},  {3, 2, 3, -1, 1}, {3, 3, 2, -1, 1}, {3, 4, 1, 1, 1},
    {1, 1, 1, 2, 2},  {1, 3, 3, 2, 2},
    {2, 1, 2, 1, 2},  {2, 2, 1, 1, 2},  {2, 3, 4, 1, 2},  {2, 4, 3, 1, 2},
    {4, 1, 4, -1, 2}, {4, 2, 3, 1, 2},  {4, 3, 2, 1, 2},  {4, 4, 1, -1, 2},
    {1, 1, 4, 1, 3},  {1, 2, 3, -1, 3}, {1, 3, 2, -1, 3}, {1, 4, 1, 1, 3},
    {3, 1, 2, -1, 3}, {3, 2, 1, -1, 3}, {3, 3, 4, -1, 3}, {3, 4, 3, -1, 3},
    {4, 2, 2, -2, 3}, {4, 4, 4, -2, 3},
    {2, 1, 4, -1, 4}, {2, 2, 3, 1, 4},  {2, 3, 2, 1, 4},  {2, 4, 1, -1, 4},
    {3, 1, 1, -2, 4}, {3, 3, 3, -2, 4},
    {4, 1, 2, -1, 4}, {4, 2, 1, -1, 4}, {4, 3, 4, -1, 4}, {4, 4, 3, -1, 4},
};

const std::vector<TableEntry> kF3{
    {1, 1, 1, -2, 1}, {1, 4, 4, -2, 1},
    {2, 1, 2, -1, 1}, {2, 2, 1, -1, 1}, {2, 3, 4, 1, 1},  {2, 4, 3, 1, 1},
    {3, 1, 3, 1, 1},  {3, 2, 4, 1, 1},  {3, 3, 1, 1, 1},  {3, 4, 2, 1, 1},
    {1, 1, 2, 1, 2},  {1, 2, 1, 1, 2},  {1, 3, 4, -1, 2}, {1, 4, 3, -1, 2},
    {2, 2, 2, 2, 2},  {2, 3, 3, 2, 2},
    {4, 1, 3, -1, 2}, {4, 2, 4, -1, 2}, {4, 3, 1, -1, 2}, {4, 4, 2, -1, 2},
    {1, 1, 3, 1, 3},  {1, 2, 4, 1, 3},  {1, 3, 1, 1, 3},  {1, 4, 2, 1, 3},
    {3, 2, 2, -2, 3}, {3, 3, 3, -2, 3},
    {4, 1, 2, 1, 3},  {4, 2, 1, 1, 3},  {4, 3, 4, -1, 3}, {4, 4, 3, -1, 3},
    {2, 1, 3, -1, 4}, {2, 2, 4, -1, 4}, {2, 3, 1, -1, 4}, {2, 4, 2, -1, 4},
    {3, 1, 2, -1, 4}, {3, 2, 1, -1, 4}, {3, 3, 4, 1, 4},  {3, 4, 3, 1, 4},
    {4, 1, 1, 2, 4},  {4, 4, 4, 2, 4},
};

Tensor from_entries(const std::vector<TableEntry>& entries,
                    const std::array<Rational, 4>& l) {
  Tensor t(4, kVar03);
  for (const TableEntry& e : entries)
    t(e.x - 1, e.y - 1, e.z - 1) =
        Rational(e.coeff) * l[static_cast<std::size_t>(e.lam - 1)];
  return t;
}

Tensor expected_nabla(const std::array<Rational, 4>& l) {
  Tensor t(4, kVarDDU);
  const Rational& l1 = l[0];
  const Rational& l2 = l[1];
  const Rational& l3 = l[2];
  const Rational& l4 = l[3];
  const auto row = [&t](int i, int j, std::array<Rational, 4> v) {
    for (int k = 0; k < 4; ++k) t(i, j, k) = v[static_cast<std::size_t>(k)];
  };
  const Rational z;
  row(0, 0, {z, z, l2, l1});
  row(1, 1, {z, z, l2, l1});
  row(0, 2, {l2, z, z, -l3});
  row(3, 1, {l2, z, z, -l3});
  row(0, 3, {l1, z, l3, z});
  row(2, 1, {-l1, z, -l3, z});
  row(1, 2, {z, l2, z, l4});
  row(3, 0, {z, -l2, z, -l4});
  row(1, 3, {z, l1, -l4, z});
  row(2, 0, {z, l1, -l4, z});
  row(2, 2, {-l4, -l3, z, z});
  row(3, 3, {-l4, -l3, z, z});
  return t;
}

Tensor expected_natural(const std::array<Rational, 4>& l) {
  // Published table: D_{X_i} X_j has a single nonzero component
  // (target, +-1/2 lambda_m); rows ordered (i,j) with 1-based data
  // {target, sign, m}.
  static constexpr int kRows[4][4][3] = {
      {{2, -1, 3}, {1, 1, 3}, {4, -1, 3}, {3, 1, 3}},
      {{2, 1, 4}, {1, -1, 4}, {4, 1, 4}, {3, -1, 4}},
      {{2, 1, 1}, {1, -1, 1}, {4, 1, 1}, {3, -1, 1}},
      {{2, -1, 2}, {1, 1, 2}, {4, -1, 2}, {3, 1, 2}},
  };
  Tensor t(4, kVarDDU);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int* e = kRows[i][j];
      t(i, j, e[0] - 1) = Rational(e[1], 2) * l[static_cast<std::size_t>(e[2] - 1)];
    }
  return t;
}

Tensor expected_curvature(const std::array<Rational, 4>& l) {
  const Rational& l1 = l[0];
  const Rational& l2 = l[1];
  const Rational& l3 = l[2];
  const Rational& l4 = l[3];
  // Canonical values on ordered index pairs (a<b),(c<d) with (a,b) <= (c,d);
  // everything else follows from the curvature symmetries.
  std::map<std::array<int, 4>, Rational> canon;
  const auto put = [&canon](int a, int b, int c, int d, Rational v) {
    canon[{a, b, c, d}] = std::move(v);
  };
  put(0, 1, 0, 1, -(l1 * l1 + l2 * l2));
  put(0, 2, 0, 2, l2 * l2 - l4 * l4);
  put(0, 3, 0, 3, l1 * l1 - l4 * l4);
  put(1, 2, 1, 2, l2 * l2 - l3 * l3);
  put(1, 3, 1, 3, l1 * l1 - l3 * l3);
  put(2, 3, 2, 3, l3 * l3 + l4 * l4);
  put(0, 2, 0, 3, l1 * l2);
  put(1, 2, 1, 3, l1 * l2);
  put(0, 1, 1, 2, -(l1 * l3));
  put(0, 3, 2, 3, -(l1 * l3));
  put(0, 1, 0, 2, -(l1 * l4));
  put(1, 3, 2, 3, l1 * l4);
  put(0, 1, 1, 3, l2 * l3);
  put(0, 2, 2, 3, -(l2 * l3));
  put(0, 1, 0, 3, l2 * l4);
  put(1, 2, 2, 3, l2 * l4);
  put(0, 2, 1, 2, -(l3 * l4));
  put(0, 3, 1, 3, -(l3 * l4));

  Tensor t(4, kVar04);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int w = 0; w < 4; ++w) {
          if (i == j || k == w) continue;
          int s = 1;
          int a = i, b = j;
          if (a > b) {
            std::swap(a, b);
            s = -s;
          }
          int c = k, d = w;
          if (c > d) {
            std::swap(c, d);
            s = -s;
          }
          std::array<int, 4> key{a, b, c, d};
          if (std::make_pair(a, b) > std::make_pair(c, d)) key = {c, d, a, b};
          const auto it = canon.find(key);
          if (it != canon.end()) t(i, j, k, w) = Rational(s) * it->second;
        }
  return t;
}

Tensor expected_ricci(const std::array<Rational, 4>& l) {
  const Rational& l1 = l[0];
  const Rational& l2 = l[1];
  const Rational& l3 = l[2];
  const Rational& l4 = l[3];
  Tensor t(4, std::vector<Variance>(2, Variance::down));
  const auto put = [&t](int i, int j, Rational v) {
    t(i - 1, j - 1) = v;
    t(j - 1, i - 1) = std::move(v);
  };
  put(1, 1, Rational(2) * (l1 * l1 + l2 * l2 - l4 * l4));
  put(2, 2, Rational(2) * (l1 * l1 + l2 * l2 - l3 * l3));
  put(3, 3, Rational(2) * (l4 * l4 + l3 * l3 - l2 * l2));
  put(4, 4, Rational(2) * (l4 * l4 + l3 * l3 - l1 * l1));
  put(1, 2, Rational(-2) * l3 * l4);
  put(1, 3, Rational(-2) * l1 * l3);
  put(1, 4, Rational(2) * l2 * l3);
  put(2, 3, Rational(2) * l1 * l4);
  put(2, 4, Rational(-2) * l2 * l4);
  put(3, 4, Rational(-2) * l1 * l2);
  return t;
}

void diff_tensors(std::vector<GoldenDiff>& out, const std::string& table,
                  const Tensor& got, const Tensor& want) {
  std::vector<int> idx;
  for (std::size_t f = 0; f < got.size(); ++f) {
    if (got[f] == want[f]) continue;
    got.unflatten(f, idx);
    out.push_back({table, tuple1(idx), got[f].str(), want[f].str()});
  }
}

}  // namespace

HGManifold build_example_w4(const std::array<Rational, 4>& lambda) {
  std::vector<StructureEntry> entries;
  const auto bracket = [&entries](int i, int j, std::array<Rational, 4> v) {
    for (int k = 0; k < 4; ++k)
      if (!v[static_cast<std::size_t>(k)].is_zero())
        entries.push_back({i - 1, j - 1, k, v[static_cast<std::size_t>(k)]});
  };
  const Rational& l1 = lambda[0];
  const Rational& l2 = lambda[1];
  const Rational& l3 = lambda[2];
  const Rational& l4 = lambda[3];
  bracket(1, 4, {l1, l2, l3, l4});
  bracket(2, 3, {l1, l2, l3, l4});
  bracket(1, 3, {l2, -l1, l4, -l3});
  bracket(2, 4, {-l2, l1, -l4, l3});
  const LieAlgebra lie = make_lie_algebra(4, entries);

  Tensor g(4, std::vector<Variance>(2, Variance::down));
  g(0, 0) = Rational(1);
  g(1, 1) = Rational(1);
  g(2, 2) = Rational(-1);
  g(3, 3) = Rational(-1);

  return make_hg_manifold(lie, g, standard_hypercomplex(1));
}

std::vector<GoldenDiff> golden_table_diffs(const PipelineResult& result,
                                           const std::array<Rational, 4>& lambda) {
  if (result.manifold.dim() != 4)
    throw ShapeError("published tables exist for the dimension-4 family only");
  std::vector<GoldenDiff> out;

  diff_tensors(out, "nabla", result.nabla.gamma, expected_nabla(lambda));
  diff_tensors(out, "F_1", result.F[0], from_entries(kF1, lambda));
  diff_tensors(out, "F_2", result.F[1], from_entries(kF2, lambda));
  diff_tensors(out, "F_3", result.F[2], from_entries(kF3, lambda));

  {
    Tensor theta(4, {Variance::down});
    theta(0) = Rational(4) * lambda[3];
    theta(1) = Rational(4) * lambda[2];
    theta(2) = Rational(-4) * lambda[1];
    theta(3) = Rational(-4) * lambda[0];
    diff_tensors(out, "theta", result.lee.theta, theta);
  }

  diff_tensors(out, "D", result.bundle.d.gamma, expected_natural(lambda));
  diff_tensors(out, "R", result.riemann, expected_curvature(lambda));
  diff_tensors(out, "ricci", result.rho, expected_ricci(lambda));

  {
    const Rational want = Rational(6) * (lambda[0] * lambda[0] + lambda[1] * lambda[1] -
                                         lambda[2] * lambda[2] - lambda[3] * lambda[3]);
    if (result.tau != want)
      out.push_back({"tau", "scalar", result.tau.str(), want.str()});
  }

  return out;
}

CheckReport worked_example_checks(const PipelineResult& result,
                                  const std::array<Rational, 4>& lambda) {
  CheckReport rep;
  const Tensor& g = result.manifold.metric.g;
  std::vector<int> idx;

  {
    Tensor rhs = Rational(-1, 2) * kulkarni_nomizu(g, result.rho);
    rhs += (result.tau / Rational(12)) * kulkarni_nomizu(g, g);
    if (detail::first_mismatch(result.riemann, rhs, idx))
      rep.add(CheckItem::failed("curvature_ricci_trace_form", "at " + tuple1(idx)));
    else
      rep.add(CheckItem::passed("curvature_ricci_trace_form"));
  }

  if (result.bundle.k.is_zero()) {
    rep.add(CheckItem::passed("natural_connection_flat_on_family"));
  } else {
    detail::first_mismatch(result.bundle.k, Tensor(4, kVar04), idx);
    rep.add(CheckItem::failed("natural_connection_flat_on_family",
                              "nonzero at " + tuple1(idx)));
  }

  rep.add(result.classification.in_w
              ? CheckItem::passed("family_in_conformal_class")
              : CheckItem::failed("family_in_conformal_class",
                                  "membership fails for at least one structure"));

  {
    bool ok = true;
    for (int a = 0; a < 3; ++a)
      ok = ok && abelian_structure(result.manifold.J[static_cast<std::size_t>(a)],
                                   result.manifold.lie);
    rep.add(ok ? CheckItem::passed("abelian_structures")
               : CheckItem::failed("abelian_structures",
                                   "[Jx,Jy] != [x,y] for some structure"));
  }

  {
    bool ok = true;
    for (bool f : result.classification.integrable) ok = ok && f;
    rep.add(ok ? CheckItem::passed("integrable_structures")
               : CheckItem::failed("integrable_structures",
                                   "nonzero Nijenhuis tensor found"));
  }

  bool lambda_zero = true;
  for (const Rational& v : lambda) lambda_zero = lambda_zero && v.is_zero();

  rep.add(result.classification.in_k == lambda_zero
              ? CheckItem::passed("parallel_structure_iff_zero_lambda")
              : CheckItem::failed("parallel_structure_iff_zero_lambda",
                                  "membership flag contradicts the parameters"));
  rep.add(result.parallel_torsion.torsion_parallel == lambda_zero
              ? CheckItem::passed("torsion_parallel_iff_zero_lambda")
              : CheckItem::failed("torsion_parallel_iff_zero_lambda",
                                  "parallel-torsion flag contradicts the parameters"));

  const Rational balance = lambda[0] * lambda[0] + lambda[1] * lambda[1] -
                           lambda[2] * lambda[2] - lambda[3] * lambda[3];
  rep.add(result.classification.isotropic_hk == balance.is_zero()
              ? CheckItem::passed("isotropy_iff_lambda_square_balance")
              : CheckItem::failed("isotropy_iff_lambda_square_balance",
                                  "isotropy flag contradicts the parameters"));
  rep.add(result.tau.is_zero() == balance.is_zero()
              ? CheckItem::passed("scalar_flat_iff_lambda_square_balance")
              : CheckItem::failed("scalar_flat_iff_lambda_square_balance",
                                  "tau = " + result.tau.str()));

  {
    const Rational want = Rational(-16) * balance;
    rep.add(result.lee.theta_omega == want
                ? CheckItem::passed("lee_square_lambda_formula")
                : CheckItem::failed("lee_square_lambda_formula",
                                    "theta(Omega) = " + result.lee.theta_omega.str() +
                                        ", expected " + want.str()));
  }

  {
    const std::array<Rational, 4> want{-lambda[0], Rational(-1, 2) * lambda[1],
                                       Rational(-1, 2) * lambda[2], -lambda[3]};
    bool ok = true;
    for (int m = 0; m < 4 && ok; ++m)
      ok = result.bundle.torsion_vec(0, 3, m) == want[static_cast<std::size_t>(m)];
    rep.add(ok ? CheckItem::passed("torsion_sample_vector")
               : CheckItem::failed("torsion_sample_vector",
                                   "T(X_1,X_4) disagrees with the published column"));
  }

  return rep;
}

std::vector<std::array<Rational, 4>> sample_lambdas(unsigned long long seed,
                                                    int count) {
  if (count < 0) throw ShapeError("sample count must be nonnegative");
  std::mt19937_64 eng(seed);
  std::vector<std::array<Rational, 4>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::array<Rational, 4> lam;
    for (auto& v : lam) {
      // Engine output is mapped directly so the stream is identical on every
      // platform; distribution classes are not portable.
      const long num = static_cast<long>(eng() % 11) - 5;
      const long den = 1 + static_cast<long>(eng() % 4);
      v = Rational(num, den);
    }
    out.push_back(lam);
  }
  return out;
}

}  // namespace hgman
