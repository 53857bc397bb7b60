#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hesslie/linalg.hpp"
#include "hesslie/tensor.hpp"

namespace hesslie {

/// One nonzero bracket of basis vectors: [e_i, e_j] = value.
struct BasisBracket {
  Index i;
  Index j;
  Vector value;
};

/// Finite-dimensional real Lie algebra given by structure constants
/// c(i, j, k) = coefficient of e_k in [e_i, e_j].
///
/// Construction enforces antisymmetry only. A value may therefore hold a
/// candidate bracket that fails the Jacobi identity; jacobi_check decides.
class LieAlgebra {
public:
  LieAlgebra(std::vector<std::string> labels, Tensor<Rational> structure);

  static LieAlgebra abelian(std::vector<std::string> labels);
  /// Fills c(j, i, .) = -c(i, j, .) for every listed pair.
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<BasisBracket>& brackets);

  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor<Rational>& structure() const { return c_; }

  Vector basis_vector(Index i) const;
  Vector bracket_of_basis(Index i, Index j) const;
  /// Matrix of ad(e_i); column j holds [e_i, e_j].
  Matrix ad(Index i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

private:
  std::vector<std::string> labels_;
  Tensor<Rational> c_;
};

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y);

struct JacobiViolation {
  Index i;
  Index j;
  Index k;
  Vector residual;
};

struct JacobiResult {
  std::optional<JacobiViolation> violation;
  bool passes() const { return !violation.has_value(); }
};

/// Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for i<j<k,
/// stopping at the first triple (lexicographic) where it is nonzero.
JacobiResult jacobi_check(const LieAlgebra& algebra);

/// Jacobiator of a single basis triple.
Vector jacobiator(const LieAlgebra& algebra, Index i, Index j, Index k);

/// Alternating k-linear form (k = 1, 2, 3) stored as a fully antisymmetric
/// covariant tensor.
class KForm {
public:
  explicit KForm(Tensor<Rational> coefficients);

  static KForm zero(Index dim, int degree);
  /// Dual basis covector e^i.
  static KForm covector(Index dim, Index i);
  static KForm covector(const Vector& coefficients);
  /// Two-form with (i, j) -> value and (j, i) -> -value for each entry.
  static KForm two_form(Index dim, const std::vector<std::pair<std::pair<Index, Index>, Rational>>& entries);

  int degree() const { return static_cast<int>(t_.rank()); }
  Index dim() const { return t_.shape().empty() ? 0 : t_.shape()[0]; }
  const Tensor<Rational>& coefficients() const { return t_; }

  template <typename... I>
  const Rational& operator()(I... idx) const {
    return t_(idx...);
  }

  /// Value on arbitrary vectors; the number of vectors must equal degree().
  Rational evaluate(const std::vector<Vector>& vectors) const;
  Vector as_vector() const;

  bool is_zero() const { return t_.is_zero(); }

  friend KForm operator+(const KForm& a, const KForm& b);
  friend KForm operator-(const KForm& a, const KForm& b);
  friend KForm operator*(const Rational& s, const KForm& a);
  friend bool operator==(const KForm& a, const KForm& b) { return a.t_ == b.t_; }

private:
  Tensor<Rational> t_;
};

/// Chevalley-Eilenberg differential of an invariant form.
/// Degree 1: d a(X,Y) = -a([X,Y]).
/// Degree 2: d w(X,Y,Z) = -w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X).
KForm ce_d(const LieAlgebra& algebra, const KForm& form);

/// Determinant-convention wedge, without 1/(p!q!) factors:
/// (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X),
/// (t^w)(X,Y,Z) = t(X)w(Y,Z) - t(Y)w(X,Z) + t(Z)w(X,Y).
KForm wedge(const KForm& a, const KForm& b);

}  // namespace hesslie
