#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hesslie/error.hpp"
#include "hesslie/rational.hpp"

namespace hesslie {

using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

enum class Variance { Covariant, Contravariant };

/// Relation between two axes that a tensor is certified to satisfy.
struct AxisSymmetry {
  Index first;
  Index second;
  bool antisymmetric;

  friend bool operator==(const AxisSymmetry&, const AxisSymmetry&) = default;
};

/// Dense multi-indexed array over a fixed basis, stored row-major.
template <typename Scalar>
class Tensor {
public:
  Tensor() = default;

  Tensor(std::vector<Index> shape, std::vector<Variance> variance)
      : shape_(std::move(shape)), variance_(std::move(variance)) {
    if (shape_.size() != variance_.size()) {
      throw Error(ErrorKind::ShapeMismatch, "shape and variance ranks differ");
    }
    for (Index extent : shape_) {
      if (extent < 0) {
        throw Error(ErrorKind::ShapeMismatch, "negative axis length");
      }
    }
    entries_.assign(static_cast<std::size_t>(product(shape_)), Scalar(0));
  }

  /// Rank-k tensor with every axis of length dim.
  static Tensor cube(Index dim, std::vector<Variance> variance) {
    std::vector<Index> shape(variance.size(), dim);
    return Tensor(std::move(shape), std::move(variance));
  }

  static Tensor from_matrix(const MatrixX<Scalar>& m, Variance row, Variance col) {
    Tensor t({m.rows(), m.cols()}, {row, col});
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        t(i, j) = m(i, j);
      }
    }
    return t;
  }

  static Tensor from_vector(const VectorX<Scalar>& v, Variance var) {
    Tensor t({v.size()}, {var});
    for (Index i = 0; i < v.size(); ++i) {
      t(i) = v(i);
    }
    return t;
  }

  Index rank() const { return static_cast<Index>(shape_.size()); }
  const std::vector<Index>& shape() const { return shape_; }
  const std::vector<Variance>& variance() const { return variance_; }
  Index size() const { return static_cast<Index>(entries_.size()); }
  std::span<const Scalar> entries() const { return entries_; }
  const std::vector<AxisSymmetry>& symmetries() const { return symmetries_; }

  template <typename... I>
  Scalar& operator()(I... idx) {
    return entries_[offset({static_cast<Index>(idx)...})];
  }
  template <typename... I>
  const Scalar& operator()(I... idx) const {
    return entries_[offset({static_cast<Index>(idx)...})];
  }

  Scalar& at(std::span<const Index> idx) { return entries_[offset(idx)]; }
  const Scalar& at(std::span<const Index> idx) const { return entries_[offset(idx)]; }

  /// Flat position -> multi-index.
  std::vector<Index> unravel(Index flat) const {
    std::vector<Index> idx(shape_.size());
    for (Index a = rank() - 1; a >= 0; --a) {
      const Index extent = shape_[static_cast<std::size_t>(a)];
      idx[static_cast<std::size_t>(a)] = flat % extent;
      flat /= extent;
    }
    return idx;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& x) { return x == Scalar(0); });
  }

  /// Verifies the relation entrywise and records it; throws NotSymmetric when
  /// any entry breaks it.
  Tensor with_symmetry(AxisSymmetry s) const {
    if (s.first == s.second || s.first < 0 || s.second < 0 || s.first >= rank() ||
        s.second >= rank() || shape_[static_cast<std::size_t>(s.first)] !=
                                  shape_[static_cast<std::size_t>(s.second)]) {
      throw Error(ErrorKind::ShapeMismatch, "invalid symmetry axes");
    }
    for (Index flat = 0; flat < size(); ++flat) {
      auto idx = unravel(flat);
      std::swap(idx[static_cast<std::size_t>(s.first)], idx[static_cast<std::size_t>(s.second)]);
      const Scalar& mirrored = at(idx);
      const Scalar& here = entries_[static_cast<std::size_t>(flat)];
      if (s.antisymmetric ? !(here == -mirrored) : !(here == mirrored)) {
        throw Error(ErrorKind::NotSymmetric, "tensor violates declared axis relation");
      }
    }
    Tensor out = *this;
    out.symmetries_.push_back(s);
    return out;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    symmetries_ = common_symmetries(o);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    symmetries_ = common_symmetries(o);
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    for (auto& x : entries_) x *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }

  /// Entry equality; variance tags must agree too.
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.variance_ == b.variance_ && a.entries_ == b.entries_;
  }

private:
  static Index product(const std::vector<Index>& s) {
    return std::accumulate(s.begin(), s.end(), Index{1}, std::multiplies<>());
  }

  std::size_t offset(std::span<const Index> idx) const {
    if (static_cast<Index>(idx.size()) != rank()) {
      throw Error(ErrorKind::ShapeMismatch, "index rank differs from tensor rank");
    }
    Index flat = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] < 0 || idx[a] >= shape_[a]) {
        throw Error(ErrorKind::ShapeMismatch, "index out of range");
      }
      flat = flat * shape_[a] + idx[a];
    }
    return static_cast<std::size_t>(flat);
  }
  std::size_t offset(std::initializer_list<Index> idx) const {
    return offset(std::span<const Index>(idx.begin(), idx.size()));
  }

  void require_same_shape(const Tensor& o) const {
    if (shape_ != o.shape_ || variance_ != o.variance_) {
      throw Error(ErrorKind::ShapeMismatch, "tensor shapes differ");
    }
  }

  std::vector<AxisSymmetry> common_symmetries(const Tensor& o) const {
    std::vector<AxisSymmetry> out;
    for (const auto& s : symmetries_) {
      if (std::find(o.symmetries_.begin(), o.symmetries_.end(), s) != o.symmetries_.end()) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<Index> shape_;
  std::vector<Variance> variance_;
  std::vector<Scalar> entries_;
  std::vector<AxisSymmetry> symmetries_;
};

/// Sums products over each (axis of a, axis of b) pair. The result carries the
/// uncontracted axes of a followed by those of b.
template <typename Scalar>
Tensor<Scalar> contract(const Tensor<Scalar>& a, const Tensor<Scalar>& b,
                        const std::vector<std::pair<Index, Index>>& axes) {
  std::vector<bool> a_used(static_cast<std::size_t>(a.rank()), false);
  std::vector<bool> b_used(static_cast<std::size_t>(b.rank()), false);
  for (const auto& [ia, ib] : axes) {
    if (ia < 0 || ia >= a.rank() || ib < 0 || ib >= b.rank()) {
      throw Error(ErrorKind::ShapeMismatch, "contraction axis out of range");
    }
    const auto ua = static_cast<std::size_t>(ia);
    const auto ub = static_cast<std::size_t>(ib);
    if (a_used[ua] || b_used[ub]) {
      throw Error(ErrorKind::ShapeMismatch, "axis contracted twice");
    }
    if (a.shape()[ua] != b.shape()[ub]) {
      throw Error(ErrorKind::ShapeMismatch, "contracted axes have different lengths");
    }
    if (a.variance()[ua] == b.variance()[ub]) {
      throw Error(ErrorKind::ShapeMismatch, "contracted axes must have opposite variance");
    }
    a_used[ua] = b_used[ub] = true;
  }

  std::vector<Index> shape;
  std::vector<Variance> variance;
  std::vector<Index> a_free;
  std::vector<Index> b_free;
  for (Index i = 0; i < a.rank(); ++i) {
    if (!a_used[static_cast<std::size_t>(i)]) {
      a_free.push_back(i);
      shape.push_back(a.shape()[static_cast<std::size_t>(i)]);
      variance.push_back(a.variance()[static_cast<std::size_t>(i)]);
    }
  }
  for (Index i = 0; i < b.rank(); ++i) {
    if (!b_used[static_cast<std::size_t>(i)]) {
      b_free.push_back(i);
      shape.push_back(b.shape()[static_cast<std::size_t>(i)]);
      variance.push_back(b.variance()[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<Index> summed_shape;
  for (const auto& [ia, ib] : axes) summed_shape.push_back(a.shape()[static_cast<std::size_t>(ia)]);
  const Index summed_count = std::accumulate(summed_shape.begin(), summed_shape.end(), Index{1},
                                             std::multiplies<>());

  Tensor<Scalar> out(shape, variance);
  std::vector<Index> ai(static_cast<std::size_t>(a.rank()));
  std::vector<Index> bi(static_cast<std::size_t>(b.rank()));
  for (Index flat = 0; flat < out.size(); ++flat) {
    const auto oi = out.unravel(flat);
    for (std::size_t k = 0; k < a_free.size(); ++k) ai[static_cast<std::size_t>(a_free[k])] = oi[k];
    for (std::size_t k = 0; k < b_free.size(); ++k)
      bi[static_cast<std::size_t>(b_free[k])] = oi[a_free.size() + k];
    Scalar acc(0);
    for (Index s = 0; s < summed_count; ++s) {
      Index rem = s;
      for (Index k = static_cast<Index>(axes.size()) - 1; k >= 0; --k) {
        const auto uk = static_cast<std::size_t>(k);
        const Index v = rem % summed_shape[uk];
        rem /= summed_shape[uk];
        ai[static_cast<std::size_t>(axes[uk].first)] = v;
        bi[static_cast<std::size_t>(axes[uk].second)] = v;
      }
      acc += a.at(ai) * b.at(bi);
    }
    out.at(oi) = acc;
  }
  return out;
}

}  // namespace hesslie
