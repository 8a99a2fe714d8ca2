#ifndef HGMAN_SRC_DETAIL_HPP
#define HGMAN_SRC_DETAIL_HPP

// Internal helpers shared by the library sources; not installed.

#include <string>
#include <vector>

#include "hgman/errors.hpp"
#include "hgman/tensor.hpp"

namespace hgman::detail {

/// "(i+1,j+1,...)" — 1-based index tuple for error/report messages.
inline std::string tuple1(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + ")";
}

/// Plugs J into one covariant slot: out(..., z, ...) = t(..., Jz, ...).
inline Tensor sub_j(const Tensor& t, int slot, const Tensor& J) {
  if (slot < 0 || slot >= t.rank() ||
      t.variance()[static_cast<std::size_t>(slot)] != Variance::down)
    throw ShapeError("J substitution needs a covariant slot in range");
  const int d = t.dim();
  Tensor out(d, t.variance());
  std::vector<int> idx, src;
  for (std::size_t f = 0; f < t.size(); ++f) {
    out.unflatten(f, idx);
    src = idx;
    Rational acc;
    for (int p = 0; p < d; ++p) {
      const Rational& jv = J(p, idx[static_cast<std::size_t>(slot)]);
      if (jv.is_zero()) continue;
      src[static_cast<std::size_t>(slot)] = p;
      acc += jv * t.at(src);
    }
    out[f] = acc;
  }
  return out;
}

/// t(x,y,...) - t(y,x,...).
inline Tensor antisym01(const Tensor& t) {
  Tensor out(t.dim(), t.variance());
  std::vector<int> idx;
  for (std::size_t f = 0; f < t.size(); ++f) {
    out.unflatten(f, idx);
    std::swap(idx[0], idx[1]);
    out[f] = t[f] - t.at(idx);
  }
  return out;
}

/// True when the tensors differ; idx receives the first differing position.
inline bool first_mismatch(const Tensor& a, const Tensor& b, std::vector<int>& idx) {
  for (std::size_t f = 0; f < a.size(); ++f)
    if (a[f] != b[f]) {
      a.unflatten(f, idx);
      return true;
    }
  return false;
}

}  // namespace hgman::detail

#endif
