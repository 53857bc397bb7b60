#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hesslie/lie_algebra.hpp"

namespace hesslie {

/// Left-invariant connection: gamma(i, j, k) = coefficient of e_k in
/// nabla_{e_i} e_j.
class Connection {
public:
  Connection(LieAlgebra base, Tensor<Rational> gamma);

  static Connection zero(LieAlgebra base);

  const LieAlgebra& base() const { return base_; }
  const Tensor<Rational>& gamma() const { return gamma_; }
  Index dim() const { return base_.dim(); }

  /// nabla_{e_i} as a matrix; column j holds nabla_{e_i} e_j.
  Matrix operator_of(Index i) const;
  /// nabla_x as a matrix.
  Matrix operator_of(const Vector& x) const;
  Vector apply(const Vector& x, const Vector& y) const;
  Vector apply_basis(Index i, Index j) const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.base_ == b.base_ && a.gamma_ == b.gamma_;
  }

private:
  LieAlgebra base_;
  Tensor<Rational> gamma_;
};

/// Symmetric bilinear form on the algebra. Positive definiteness is a
/// verdict, not a construction invariant.
class Metric {
public:
  Metric(LieAlgebra base, Matrix g);

  const LieAlgebra& base() const { return base_; }
  const Matrix& matrix() const { return g_; }
  Index dim() const { return base_.dim(); }
  Rational operator()(const Vector& x, const Vector& y) const { return x.dot(g_ * y); }
  Metric scaled(const Rational& s) const { return Metric(base_, g_ * s); }

  friend bool operator==(const Metric& a, const Metric& b) { return a.base_ == b.base_ && a.g_ == b.g_; }

private:
  LieAlgebra base_;
  Matrix g_;
};

/// Linear map J with J^2 = -id; column j holds J e_j.
class ComplexStructure {
public:
  ComplexStructure(LieAlgebra base, Matrix j);

  const LieAlgebra& base() const { return base_; }
  const Matrix& matrix() const { return j_; }
  Vector apply(const Vector& x) const { return j_ * x; }

private:
  LieAlgebra base_;
  Matrix j_;
};

/// T(X,Y) = nabla_X Y - nabla_Y X - [X,Y]; entry (i, j, k) is the e_k
/// component of T(e_i, e_j).
Tensor<Rational> torsion(const Connection& connection);

/// Theta(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z;
/// entry (i, j, l, k) is the e_k component of Theta(e_i, e_j) e_l.
Tensor<Rational> curvature(const Connection& connection);

/// (nabla_X g)(Y,Z) = -g(nabla_X Y, Z) - g(Y, nabla_X Z): invariant data has
/// constant frame components, so no derivative term appears.
Tensor<Rational> covariant_derivative(const Connection& connection, const Metric& metric);

struct CodazziViolation {
  Index i;
  Index j;
  Index k;
  /// (nabla_{e_i} g)(e_j, e_k) - (nabla_{e_j} g)(e_i, e_k)
  Rational residual;
};

struct CodazziResult {
  std::optional<CodazziViolation> violation;
  bool passes() const { return !violation.has_value(); }
};

CodazziResult codazzi_check(const Connection& connection, const Metric& metric);

/// Three-way verdict of the constant-curvature fit.
struct CurvatureValue {
  Rational c;
};
struct NoConstantCurvature {
  Index i;
  Index j;
  Index l;
  /// Theta(e_i,e_j)e_l - c (g_jl e_i - g_il e_j) for the candidate c.
  Vector residual;
};
struct CurvatureUnderdetermined {};

using ConstantCurvature = std::variant<CurvatureValue, NoConstantCurvature, CurvatureUnderdetermined>;

ConstantCurvature constant_curvature(const Connection& connection, const Metric& metric);

/// Entry (i, j, k) is the e_k component of
/// N(e_i, e_j) = [X,Y] + J([JX,Y] + [X,JY]) - [JX,JY].
Tensor<Rational> nijenhuis(const LieAlgebra& algebra, const ComplexStructure& j);

struct LeeFormSolution {
  /// Pivot solution of d omega = theta ^ omega, free coordinates set to zero.
  std::optional<KForm> theta;
  bool closed = false;
  /// Left-kernel certificate when no solution exists; indexed like
  /// sorted_triples(dim).
  std::optional<Vector> obstruction;
  Rational obstruction_value;
};

LeeFormSolution lee_form_solve(const LieAlgebra& algebra, const KForm& omega);

/// All i<j<k in lexicographic order.
std::vector<std::array<Index, 3>> sorted_triples(Index dim);

/// Positive verdicts need no evidence. Each negative verdict points at
/// least one witness with an exactly nonzero residual.
struct Witness {
  std::string claim;
  std::vector<Index> indices;
  Vector residual;
  /// Auxiliary data needed to re-evaluate some claims (obstruction vectors).
  std::optional<Vector> detail;
};

struct StructureReport {
  std::optional<bool> is_lie;
  std::optional<bool> is_torsion_free;
  std::optional<bool> is_flat;
  std::optional<bool> is_codazzi;
  std::optional<bool> is_positive_definite;
  std::optional<bool> is_statistical;
  std::optional<bool> is_hessian;
  std::optional<ConstantCurvature> constant_curvature;
  std::optional<bool> is_integrable;
  std::optional<bool> is_closed;
  std::optional<bool> is_compatible;  ///< omega(., J.) positive definite
  std::optional<bool> is_kahler;
  std::optional<bool> is_lck;
  std::optional<KForm> lee_form;
  std::vector<Witness> witnesses;

  bool has_witness(const std::string& claim) const;
};

struct ClassifyInput {
  const LieAlgebra& algebra;
  const Connection* connection = nullptr;
  const Metric* metric = nullptr;
  const ComplexStructure* complex_structure = nullptr;
  const KForm* omega = nullptr;
};

/// Fills every verdict computable from the supplied pieces.
StructureReport classify(const ClassifyInput& input);

}  // namespace hesslie
