#pragma once

#include <optional>
#include <vector>

#include "hesslie/tensor.hpp"

namespace hesslie {

template <typename Scalar>
bool is_symmetric(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <typename Scalar>
bool is_zero(const MatrixX<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <typename Scalar>
bool is_zero(const VectorX<Scalar>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!(v(i) == Scalar(0))) return false;
  return true;
}

/// Exact determinant by elimination on the first nonzero pivot of each column.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const Index n = m.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Determinants of the k x k upper-left blocks, k = 1..n.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const MatrixX<Scalar>& m) {
  std::vector<Scalar> out;
  for (Index k = 1; k <= m.rows(); ++k) out.push_back(determinant<Scalar>(m.topLeftCorner(k, k)));
  return out;
}

/// Sylvester criterion. Throws NotSymmetric for non-symmetric input.
template <typename Scalar>
bool is_positive_definite(const MatrixX<Scalar>& m) {
  if (!is_symmetric(m)) throw Error(ErrorKind::NotSymmetric, "positive definiteness needs a symmetric matrix");
  for (const auto& minor : leading_principal_minors(m))
    if (!(minor > Scalar(0))) return false;
  return true;
}

/// Tensor overload: the tensor must be a square 2-covariant array.
template <typename Scalar>
bool is_positive_definite(const Tensor<Scalar>& t) {
  if (t.rank() != 2 || t.shape()[0] != t.shape()[1] || t.variance()[0] != Variance::Covariant ||
      t.variance()[1] != Variance::Covariant) {
    throw Error(ErrorKind::ShapeMismatch, "expected a square 2-covariant tensor");
  }
  MatrixX<Scalar> m(t.shape()[0], t.shape()[1]);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = t(i, j);
  return is_positive_definite(m);
}

template <typename Scalar>
struct LinearSolution {
  Index rank = 0;
  /// Pivot solution with every free variable set to zero; empty if inconsistent.
  std::optional<VectorX<Scalar>> solution;
  /// When inconsistent: y with y^T A = 0 and y^T b != 0.
  std::optional<VectorX<Scalar>> obstruction;
  std::vector<Index> pivot_columns;
};

/// Solves A x = b exactly by Gauss-Jordan elimination, choosing pivots in
/// increasing column order. Tracks row operations so that an inconsistent
/// system comes back with a left-kernel certificate.
template <typename Scalar>
LinearSolution<Scalar> solve_exact(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  const Index rows = a.rows();
  const Index cols = a.cols();
  MatrixX<Scalar> work(rows, cols + 1 + rows);
  work.setZero();
  work.leftCols(cols) = a;
  work.col(cols) = b;
  for (Index r = 0; r < rows; ++r) work(r, cols + 1 + r) = Scalar(1);

  LinearSolution<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = row;
    while (pivot < rows && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) work.row(pivot).swap(work.row(row));
    const Scalar inv = Scalar(1) / work(row, col);
    for (Index c = 0; c < work.cols(); ++c) work(row, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || work(r, col) == Scalar(0)) continue;
      const Scalar f = work(r, col);
      for (Index c = 0; c < work.cols(); ++c) work(r, c) -= f * work(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;

  for (Index r = out.rank; r < rows; ++r) {
    if (!(work(r, cols) == Scalar(0))) {
      out.obstruction = VectorX<Scalar>(work.row(r).tail(rows).transpose());
      return out;
    }
  }
  VectorX<Scalar> x(cols);
  x.setZero();
  for (Index k = 0; k < out.rank; ++k) x(out.pivot_columns[static_cast<std::size_t>(k)]) = work(k, cols);
  out.solution = std::move(x);
  return out;
}

/// A nonzero vector in the kernel of a square matrix, if one exists.
template <typename Scalar>
std::optional<VectorX<Scalar>> kernel_vector(const MatrixX<Scalar>& m) {
  const Index n = m.cols();
  VectorX<Scalar> zero(m.rows());
  zero.setZero();
  const auto sol = solve_exact<Scalar>(m, zero);
  if (sol.rank == n) return std::nullopt;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : sol.pivot_columns) is_pivot[static_cast<std::size_t>(p)] = true;
  Index free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
  // Reduce again with the free column moved to the right-hand side.
  MatrixX<Scalar> reduced(m.rows(), n);
  reduced = m;
  VectorX<Scalar> rhs = -m.col(free_col);
  reduced.col(free_col).setZero();
  const auto part = solve_exact<Scalar>(reduced, rhs);
  VectorX<Scalar> x = *part.solution;
  x(free_col) = Scalar(1);
  return x;
}

}  // namespace hesslie

namespace hesslie {

extern template Rational determinant<Rational>(Matrix);
extern template bool is_positive_definite<Rational>(const Matrix&);
extern template bool is_positive_definite<Rational>(const Tensor<Rational>&);
extern template LinearSolution<Rational> solve_exact<Rational>(const Matrix&, const Vector&);
extern template std::optional<Vector> kernel_vector<Rational>(const Matrix&);

}  // namespace hesslie
