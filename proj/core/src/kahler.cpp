#include "hgman/kahler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "hgman/errors.hpp"
#include "hgman/hg.hpp"

namespace hgman {

namespace {

/// Union-find over component indices where every identification carries a
/// sign: val(i) = sign * val(root). Contradictory closures (val = -val)
/// force the whole class to zero.
class SignedClasses {
public:
  explicit SignedClasses(int count)
      : parent_(static_cast<std::size_t>(count)),
        sign_(static_cast<std::size_t>(count), 1),
        dead_(static_cast<std::size_t>(count), false) {
    for (int i = 0; i < count; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  std::pair<int, int> find(int i) {
    int sign = 1;
    int r = i;
    while (parent_[static_cast<std::size_t>(r)] != r) {
      sign *= sign_[static_cast<std::size_t>(r)];
      r = parent_[static_cast<std::size_t>(r)];
    }
    // Path compression: repoint the chain directly at the root.
    int cur = i;
    int cur_sign = sign;
    while (parent_[static_cast<std::size_t>(cur)] != cur) {
      const int next = parent_[static_cast<std::size_t>(cur)];
      const int next_sign = cur_sign * sign_[static_cast<std::size_t>(cur)];
      parent_[static_cast<std::size_t>(cur)] = r;
      sign_[static_cast<std::size_t>(cur)] = cur_sign;
      cur = next;
      cur_sign = next_sign;
    }
    return {r, sign};
  }

  /// Imposes val(i) = s * val(j), s in {+1,-1}.
  void relate(int i, int j, int s) {
    auto [ri, si] = find(i);
    auto [rj, sj] = find(j);
    if (ri == rj) {
      if (si != s * sj) dead_[static_cast<std::size_t>(ri)] = true;
      return;
    }
    const bool was_dead =
        dead_[static_cast<std::size_t>(ri)] || dead_[static_cast<std::size_t>(rj)];
    parent_[static_cast<std::size_t>(rj)] = ri;
    sign_[static_cast<std::size_t>(rj)] = si * s * sj;
    dead_[static_cast<std::size_t>(ri)] = was_dead;
  }

  bool dead_root(int root) const { return dead_[static_cast<std::size_t>(root)]; }

private:
  std::vector<int> parent_;
  std::vector<int> sign_;
  std::vector<bool> dead_;
};

/// Action of a signed-permutation (1,1)-tensor on basis vectors:
/// J e_j = sgn[j] * e_{img[j]}.
struct PermutationAction {
  std::vector<int> img;
  std::vector<int> sgn;
};

PermutationAction permutation_of(const Tensor& J) {
  const int d = J.dim();
  PermutationAction act;
  act.img.assign(static_cast<std::size_t>(d), -1);
  act.sgn.assign(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) {
    for (int p = 0; p < d; ++p) {
      const Rational& v = J(p, j);
      if (v.is_zero()) continue;
      if (act.img[static_cast<std::size_t>(j)] != -1 ||
          (v != Rational(1) && v != Rational(-1)))
        throw InternalError("structure tensor is not a signed permutation of the frame");
      act.img[static_cast<std::size_t>(j)] = p;
      act.sgn[static_cast<std::size_t>(j)] = v == Rational(1) ? 1 : -1;
    }
    if (act.img[static_cast<std::size_t>(j)] == -1)
      throw InternalError("structure tensor kills a frame vector");
  }
  return act;
}

}  // namespace

KahlerlikeNullspace kahlerlike_nullspace(int n, const std::array<bool, 3>& impose_j,
                                         bool with_basis) {
  if (n < 1 || n > 2)
    throw PreconditionError("nullspace study supports n = 1 or n = 2 only");
  const int d = 4 * n;
  const long nvars = static_cast<long>(d) * d * d * d;
  const auto flat = [d](int x, int y, int z, int w) {
    return ((x * d + y) * d + z) * d + w;
  };

  SignedClasses uf(static_cast<int>(nvars));

  // Two-term curvature-like relations: skewness in both index pairs and the
  // pair-exchange symmetry (the latter follows from skewness plus Bianchi,
  // imposing it up front just shrinks the elimination).
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w) {
          const int base = flat(x, y, z, w);
          uf.relate(base, flat(y, x, z, w), -1);
          uf.relate(base, flat(x, y, w, z), -1);
          uf.relate(base, flat(z, w, x, y), 1);
        }

  // Reflection constraints t(x,y,Jz,Jw) = eps t(x,y,z,w) and the first-pair
  // twin, rewritten through the signed permutation each standard J induces.
  const std::array<Tensor, 3> J = standard_hypercomplex(n);
  for (int a = 0; a < 3; ++a) {
    if (!impose_j[static_cast<std::size_t>(a)]) continue;
    const PermutationAction act = permutation_of(J[static_cast<std::size_t>(a)]);
    const int eps = kEps[static_cast<std::size_t>(a)];
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z)
          for (int w = 0; w < d; ++w) {
            const int base = flat(x, y, z, w);
            const auto zi = static_cast<std::size_t>(z);
            const auto wi = static_cast<std::size_t>(w);
            uf.relate(flat(x, y, act.img[zi], act.img[wi]), base,
                      eps * act.sgn[zi] * act.sgn[wi]);
            const auto xi = static_cast<std::size_t>(x);
            const auto yi = static_cast<std::size_t>(y);
            uf.relate(flat(act.img[xi], act.img[yi], z, w), base,
                      eps * act.sgn[xi] * act.sgn[yi]);
          }
  }

  // Number the surviving classes.
  std::map<int, int> column_of;
  for (long i = 0; i < nvars; ++i) {
    auto [r, s] = uf.find(static_cast<int>(i));
    (void)s;
    if (!uf.dead_root(r)) column_of.emplace(r, 0);
  }
  {
    int next = 0;
    for (auto& [root, col] : column_of) col = next++;
  }
  const long ncols = static_cast<long>(column_of.size());

  // First Bianchi rows, reduced to class coordinates and deduplicated with a
  // sign/gcd normalization.
  std::map<std::vector<std::pair<int, long>>, bool> row_set;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w) {
          std::map<int, long> coeff;
          const std::array<std::array<int, 3>, 3> cyc{
              {{x, y, z}, {y, z, x}, {z, x, y}}};
          for (const auto& t : cyc) {
            auto [r, s] = uf.find(flat(t[0], t[1], t[2], w));
            if (uf.dead_root(r)) continue;
            coeff[column_of.at(r)] += s;
          }
          std::vector<std::pair<int, long>> row;
          for (const auto& [c, v] : coeff)
            if (v != 0) row.emplace_back(c, v);
          if (row.empty()) continue;
          long g = 0;
          for (const auto& [c, v] : row) g = std::gcd(g, v < 0 ? -v : v);
          const long lead = row.front().second;
          for (auto& [c, v] : row) {
            v /= g;
            if (lead < 0) v = -v;
          }
          row_set.emplace(std::move(row), true);
        }

  // Dense integer matrix, fraction-free (Bareiss) elimination.
  std::vector<std::vector<Integer>> m;
  m.reserve(row_set.size());
  for (const auto& [row, unused] : row_set) {
    (void)unused;
    std::vector<Integer> dense(static_cast<std::size_t>(ncols), Integer(0));
    for (const auto& [c, v] : row) dense[static_cast<std::size_t>(c)] = Integer(v);
    m.push_back(std::move(dense));
  }

  const long nrows = static_cast<long>(m.size());
  std::vector<long> pivot_col;
  Integer prev(1);
  long top = 0;
  for (long col = 0; col < ncols && top < nrows; ++col) {
    long piv = -1;
    for (long r = top; r < nrows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(top)], m[static_cast<std::size_t>(piv)]);
    const std::vector<Integer>& prow = m[static_cast<std::size_t>(top)];
    for (long r = top + 1; r < nrows; ++r) {
      std::vector<Integer>& row = m[static_cast<std::size_t>(r)];
      const Integer factor = row[static_cast<std::size_t>(col)];
      for (long c = col + 1; c < ncols; ++c) {
        Integer val = prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)] -
                      factor * prow[static_cast<std::size_t>(c)];
        mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), prev.get_mpz_t());
        row[static_cast<std::size_t>(c)] = std::move(val);
      }
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = prow[static_cast<std::size_t>(col)];
    pivot_col.push_back(col);
    ++top;
  }
  const long bianchi_rank = top;

  KahlerlikeNullspace out;
  out.dim = d;
  out.variables = nvars;
  out.nullity = ncols - bianchi_rank;
  out.rank = nvars - out.nullity;

  if (!with_basis) return out;

  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  const std::vector<Variance> var04(4, Variance::down);
  for (long fc = 0; fc < ncols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    std::vector<Rational> sol(static_cast<std::size_t>(ncols));
    sol[static_cast<std::size_t>(fc)] = Rational(1);
    for (long i = bianchi_rank - 1; i >= 0; --i) {
      const std::vector<Integer>& row = m[static_cast<std::size_t>(i)];
      const long pc = pivot_col[static_cast<std::size_t>(i)];
      Rational acc;
      for (long c = pc + 1; c < ncols; ++c) {
        const Integer& rv = row[static_cast<std::size_t>(c)];
        if (rv != 0) acc += Rational(rv) * sol[static_cast<std::size_t>(c)];
      }
      Rational pivot_val = Rational(row[static_cast<std::size_t>(pc)]);
      sol[static_cast<std::size_t>(pc)] = Rational(-1) * acc / pivot_val;
    }

    Tensor t(d, var04);
    for (long i = 0; i < nvars; ++i) {
      auto [r, s] = uf.find(static_cast<int>(i));
      if (uf.dead_root(r)) continue;
      const Rational& v = sol[static_cast<std::size_t>(column_of.at(r))];
      if (!v.is_zero()) t[static_cast<std::size_t>(i)] = Rational(s) * v;
    }
    out.basis.push_back(std::move(t));
  }

  return out;
}

}  // namespace hgman
