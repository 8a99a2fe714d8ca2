#include "hgman/tensor.hpp"

#include <algorithm>
#include <string>

namespace hgman {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t s = 1;
  for (int i = 0; i < rank; ++i) s *= static_cast<std::size_t>(dim);
  return s;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Variance> variance)
    : dim_(dim), var_(std::move(variance)) {
  if (dim <= 0) throw ShapeError("tensor dimension must be positive");
  comp_.resize(pow_size(dim_, rank()));
}

Tensor Tensor::scalar(Rational value) {
  Tensor t;
  t.comp_[0] = std::move(value);
  return t;
}

std::size_t Tensor::flat_index(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw ShapeError("tensor access with " + std::to_string(idx.size()) +
                     " indices, rank is " + std::to_string(rank()));
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_)
      throw ShapeError("tensor index " + std::to_string(i) +
                       " out of range [0," + std::to_string(dim_) + ")");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

std::size_t Tensor::flat_index_v(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw ShapeError("tensor access with " + std::to_string(idx.size()) +
                     " indices, rank is " + std::to_string(rank()));
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_)
      throw ShapeError("tensor index " + std::to_string(i) +
                       " out of range [0," + std::to_string(dim_) + ")");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

void Tensor::unflatten(std::size_t flat, std::vector<int>& idx) const {
  idx.assign(static_cast<std::size_t>(rank()), 0);
  for (int s = rank() - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
}

bool Tensor::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

void Tensor::check_same_shape(const Tensor& o) const {
  if (dim_ != o.dim_ || var_ != o.var_)
    throw ShapeError("tensor shapes differ (dim or variance mismatch)");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (std::size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] = -r.comp_[i];
  return r;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.rank() > 0 && b.rank() > 0 && a.dim() != b.dim())
    throw ShapeError("tensor product of tensors over different frames");
  const int dim = a.rank() > 0 ? a.dim() : b.dim();
  std::vector<Variance> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  if (dim == 0) return Tensor::scalar(a[0] * b[0]);
  Tensor out(dim, std::move(var));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Tensor contract(const Tensor& t, const std::vector<std::pair<int, int>>& pairs) {
  const int rank = t.rank();
  std::vector<bool> used(static_cast<std::size_t>(rank), false);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= rank || b < 0 || b >= rank || a == b)
      throw ShapeError("contraction slot out of range");
    if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)])
      throw ShapeError("contraction slot used twice");
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    if (t.variance()[static_cast<std::size_t>(a)] == t.variance()[static_cast<std::size_t>(b)])
      throw VarianceError("contraction must pair one up slot with one down slot");
  }
  std::vector<int> keep;
  for (int s = 0; s < rank; ++s)
    if (!used[static_cast<std::size_t>(s)]) keep.push_back(s);

  std::vector<Variance> out_var;
  out_var.reserve(keep.size());
  for (int s : keep) out_var.push_back(t.variance()[static_cast<std::size_t>(s)]);
  Tensor out = keep.empty() ? Tensor::scalar(0) : Tensor(t.dim(), out_var);

  const int dim = t.dim();
  const int nkeep = static_cast<int>(keep.size());
  const int npair = static_cast<int>(pairs.size());
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  std::vector<int> kv(static_cast<std::size_t>(nkeep), 0);
  std::vector<int> pv(static_cast<std::size_t>(npair), 0);

  for (;;) {
    for (int s = 0; s < nkeep; ++s)
      idx[static_cast<std::size_t>(keep[static_cast<std::size_t>(s)])] =
          kv[static_cast<std::size_t>(s)];
    Rational acc = 0;
    for (;;) {
      for (int p = 0; p < npair; ++p) {
        idx[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)] =
            pv[static_cast<std::size_t>(p)];
        idx[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)] =
            pv[static_cast<std::size_t>(p)];
      }
      acc += t.at(idx);
      int p = npair - 1;
      for (; p >= 0; --p) {
        if (++pv[static_cast<std::size_t>(p)] < dim) break;
        pv[static_cast<std::size_t>(p)] = 0;
      }
      if (p < 0) break;
    }
    if (keep.empty()) {
      out[0] = acc;
      break;
    }
    out.at(kv) = acc;
    int s = nkeep - 1;
    for (; s >= 0; --s) {
      if (++kv[static_cast<std::size_t>(s)] < dim) break;
      kv[static_cast<std::size_t>(s)] = 0;
    }
    if (s < 0) break;
  }
  return out;
}

namespace {

/// Exact Gauss-Jordan inverse of a square rational matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMetricError("metric is singular");
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
    std::swap(inv[static_cast<std::size_t>(piv)], inv[static_cast<std::size_t>(col)]);
    const Rational d = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int c = 0; c < n; ++c) {
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  return inv;
}

}  // namespace

Metric Metric::from(const Tensor& g) {
  if (g.rank() != 2 || g.variance() != std::vector<Variance>{Variance::down, Variance::down})
    throw ShapeError("metric must be a (0,2)-tensor");
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i))
        throw StructureError("metric not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
  const auto im = invert(std::move(m));
  Metric out{g, Tensor(n, {Variance::up, Variance::up})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.inv(i, j) = im[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

Tensor raise_lower(const Tensor& t, int slot, const Metric& metric) {
  if (slot < 0 || slot >= t.rank()) throw ShapeError("raise/lower slot out of range");
  if (t.dim() != metric.dim()) throw ShapeError("raise/lower with mismatched metric dimension");
  const bool raising = t.variance()[static_cast<std::size_t>(slot)] == Variance::down;
  const Tensor& m = raising ? metric.inv : metric.g;

  std::vector<Variance> var = t.variance();
  var[static_cast<std::size_t>(slot)] = raising ? Variance::up : Variance::down;
  Tensor out(t.dim(), std::move(var));

  const int dim = t.dim();
  std::vector<int> idx;
  std::vector<int> src;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    out.unflatten(flat, idx);
    src = idx;
    Rational acc = 0;
    for (int j = 0; j < dim; ++j) {
      src[static_cast<std::size_t>(slot)] = j;
      acc += m(idx[static_cast<std::size_t>(slot)], j) * t.at(src);
    }
    out[flat] = acc;
  }
  return out;
}

Tensor kulkarni_nomizu(const Tensor& a, const Tensor& b) {
  const std::vector<Variance> v02{Variance::down, Variance::down};
  if (a.rank() != 2 || b.rank() != 2 || a.variance() != v02 || b.variance() != v02)
    throw ShapeError("Kulkarni-Nomizu product needs two (0,2)-tensors");
  if (a.dim() != b.dim()) throw ShapeError("Kulkarni-Nomizu product over different frames");
  const int d = a.dim();
  Tensor out(d, {Variance::down, Variance::down, Variance::down, Variance::down});
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w)
          out(x, y, z, w) = a(x, z) * b(y, w) - a(y, z) * b(x, w) +
                            a(y, w) * b(x, z) - a(x, w) * b(y, z);
  return out;
}

Tensor cyclic_sum_first3(const Tensor& t) {
  const std::vector<Variance> v04(4, Variance::down);
  if (t.rank() != 4 || t.variance() != v04)
    throw ShapeError("cyclic sum needs a (0,4)-tensor");
  const int d = t.dim();
  Tensor out(d, v04);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w)
          out(x, y, z, w) = t(x, y, z, w) + t(y, z, x, w) + t(z, x, y, w);
  return out;
}

Rational trace4(const Tensor& t, const Metric& metric) {
  const std::vector<Variance> v04(4, Variance::down);
  if (t.rank() != 4 || t.variance() != v04)
    throw ShapeError("total trace needs a (0,4)-tensor");
  if (t.dim() != metric.dim()) throw ShapeError("total trace with mismatched metric");
  const int d = t.dim();
  Rational acc = 0;
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < d; ++s) {
      if (metric.inv(i, s).is_zero()) continue;
      Rational inner = 0;
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          if (metric.inv(j, k).is_zero()) continue;
          inner += metric.inv(j, k) * t(i, j, k, s);
        }
      acc += metric.inv(i, s) * inner;
    }
  return acc;
}

bool bilinear_nondegenerate(const Tensor& b) {
  if (b.rank() != 2 || b.variance() != std::vector<Variance>{Variance::down, Variance::down})
    throw ShapeError("nondegeneracy check needs a (0,2)-tensor");
  const int n = b.dim();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b(i, j);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
    for (int r = col + 1; r < n; ++r) {
      const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                         m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = col; c < n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return true;
}

SignatureCount signature_of(const Tensor& sym) {
  if (sym.rank() != 2 ||
      sym.variance() != std::vector<Variance>{Variance::down, Variance::down})
    throw ShapeError("signature needs a (0,2)-tensor");
  const int n = sym.dim();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sym(i, j) != sym(j, i))
        throw StructureError("signature of a non-symmetric tensor");
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sym(i, j);
    }

  auto M = [&m](int i, int j) -> Rational& {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };

  SignatureCount sig;
  for (int k = 0; k < n; ++k) {
    if (M(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!M(r, r).is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row >= 0) {
        for (int c = 0; c < n; ++c) std::swap(M(k, c), M(swap_row, c));
        for (int r = 0; r < n; ++r) std::swap(M(r, k), M(r, swap_row));
      } else {
        int partner = -1;
        for (int c = k + 1; c < n; ++c)
          if (!M(k, c).is_zero()) {
            partner = c;
            break;
          }
        if (partner < 0) {
          ++sig.zero;
          continue;
        }
        // symmetric row+column addition makes the diagonal entry 2*M(k,partner)
        for (int c = 0; c < n; ++c) M(k, c) += M(partner, c);
        for (int r = 0; r < n; ++r) M(r, k) += M(r, partner);
      }
    }
    const Rational piv = M(k, k);
    for (int r = k + 1; r < n; ++r) {
      if (M(r, k).is_zero()) continue;
      const Rational f = M(r, k) / piv;
      for (int c = 0; c < n; ++c) M(r, c) -= f * M(k, c);
      for (int c = 0; c < n; ++c) M(c, r) -= f * M(c, k);
    }
    if (piv.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

}  // namespace hgman
