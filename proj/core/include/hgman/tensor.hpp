#ifndef HGMAN_TENSOR_HPP
#define HGMAN_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hgman/errors.hpp"
#include "hgman/rational.hpp"

namespace hgman {

/// Slot variance: contravariant (up) or covariant (down).
enum class Variance : unsigned char { up, down };

/// Dense tensor over a fixed frame of dimension `dim`, one index per slot,
/// components stored row-major in slot order. Indices are 0-based throughout
/// the library; external interfaces (configs, reports) convert to 1-based.
class Tensor {
public:
  Tensor() : dim_(0), comp_(1) {}
  Tensor(int dim, std::vector<Variance> variance);

  static Tensor scalar(Rational value);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(var_.size()); }
  const std::vector<Variance>& variance() const { return var_; }
  std::size_t size() const { return comp_.size(); }

  Rational& operator[](std::size_t flat) { return comp_[flat]; }
  const Rational& operator[](std::size_t flat) const { return comp_[flat]; }

  template <class... I>
  Rational& operator()(I... idx) {
    return comp_[flat_index({static_cast<int>(idx)...})];
  }
  template <class... I>
  const Rational& operator()(I... idx) const {
    return comp_[flat_index({static_cast<int>(idx)...})];
  }

  Rational& at(const std::vector<int>& idx) { return comp_[flat_index_v(idx)]; }
  const Rational& at(const std::vector<int>& idx) const { return comp_[flat_index_v(idx)]; }

  /// Decomposes a flat position into per-slot indices (size == rank()).
  void unflatten(std::size_t flat, std::vector<int>& idx) const;

  bool is_zero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor t) { return t *= s; }
  friend Tensor operator*(Tensor t, const Rational& s) { return t *= s; }
  Tensor operator-() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.var_ == b.var_ && a.comp_ == b.comp_;
  }

private:
  std::size_t flat_index(std::initializer_list<int> idx) const;
  std::size_t flat_index_v(const std::vector<int>& idx) const;
  void check_same_shape(const Tensor& o) const;

  int dim_;
  std::vector<Variance> var_;
  std::vector<Rational> comp_;
};

/// Tensor product; result slots are a's slots followed by b's slots.
Tensor outer(const Tensor& a, const Tensor& b);

/// Contracts each (up, down) slot pair in `pairs` (0-based slot positions,
/// orientation within a pair is free). Remaining slots keep their order.
Tensor contract(const Tensor& t, const std::vector<std::pair<int, int>>& pairs);

/// Symmetric metric together with its exact inverse.
struct Metric {
  Tensor g;    // (0,2)
  Tensor inv;  // (2,0)

  int dim() const { return g.dim(); }

  /// Validates (0,2) symmetric and inverts exactly; throws
  /// SingularMetricError when degenerate.
  static Metric from(const Tensor& g);
};

/// Flips one slot: contracts a down slot with g^{ij} (raise) or an up slot
/// with g_{ij} (lower). The slot keeps its position.
Tensor raise_lower(const Tensor& t, int slot, const Metric& metric);

/// Kulkarni-Nomizu product of two (0,2)-tensors:
/// (a (*) b)(x,y,z,w) = a(x,z)b(y,w) - a(y,z)b(x,w) + a(y,w)b(x,z) - a(x,w)b(y,z).
Tensor kulkarni_nomizu(const Tensor& a, const Tensor& b);

/// Cyclic sum over the first three slots of a (0,4)-tensor.
Tensor cyclic_sum_first3(const Tensor& t);

/// Total trace g^{is} g^{jk} t(e_i,e_j,e_k,e_s) of a (0,4)-tensor.
Rational trace4(const Tensor& t, const Metric& metric);

/// Whether a (0,2)-tensor (not necessarily symmetric) is invertible as a
/// matrix; exact Gaussian elimination.
bool bilinear_nondegenerate(const Tensor& b);

struct SignatureCount {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of a symmetric (0,2)-tensor via exact congruence
/// diagonalization.
SignatureCount signature_of(const Tensor& sym);

}  // namespace hgman

#endif
