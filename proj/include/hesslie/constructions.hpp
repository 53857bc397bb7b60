#pragma once

#include <optional>
#include <vector>

#include "hesslie/geometry.hpp"

namespace hesslie {

/// g x_nabla g_a: the vector space g + g with
/// [X1+Y1, X2+Y2] = [X1,X2] + (nabla_X1 Y2 - nabla_X2 Y1)
/// and the standard J(X+Y) = -Y + X. Basis: the first `half` vectors are
/// X+0, the rest 0+X.
struct DoubledAlgebra {
  LieAlgebra algebra;
  Connection origin;
  ComplexStructure j;
  Index half;
  /// Passes exactly when the origin connection is flat.
  JacobiResult jacobi;
};

DoubledAlgebra semidirect_double(const Connection& connection);

/// Standard J on a 2n-dimensional doubled basis.
Matrix standard_complex_structure(Index half);

/// omega(X+0, 0+Y) = g(X, Y), zero on same-block pairs.
KForm hessian_two_form(Index half, const Matrix& g);

/// g x R with radiant generator rho appended as the last basis vector and
///   nabla_X Y = D_X Y - c g(X,Y) rho,  nabla_X rho = nabla_rho X = X,
///   nabla_rho rho = rho.
struct ConeExtension {
  LieAlgebra algebra;
  Connection nabla;
  Index rho;
  Rational c;
  Connection base_connection;
  Metric base_metric;
  /// For c < 0: whether (algebra, nabla, g + t (rho*)^2) with 1 + ct = 0 is
  /// Hessian. Empty for c > 0, where that t is negative.
  std::optional<bool> hessian_at_critical_t;
};

/// Requires (D, g) statistical of constant curvature c; c is always supplied,
/// and is cross-checked unless the fit is underdetermined.
ConeExtension cone_extend(const Connection& d, const Metric& g, const Rational& c);

/// g + t (rho*)^2 on the cone algebra.
Metric cone_metric(const ConeExtension& cone, const Rational& t);

struct LckFamily {
  ConeExtension cone;
  DoubledAlgebra doubled;
  KForm omega;
  KForm theta;
  StructureReport report;
  /// d omega_t == theta ^ omega_t entrywise.
  bool identity_holds;
  bool theta_closed;
};

/// omega_t = omega + t rho^1 ^ rho^2 on the double of the cone extension,
/// with Lee form -(1 + ct) rho^1. Requires t > 0.
LckFamily lck_family(const Connection& d, const Metric& g, const Rational& c, const Rational& t);

struct KahlerFromHessian {
  DoubledAlgebra doubled;
  KForm omega;
  StructureReport report;
};

/// Requires (nabla, g) flat, torsion-free, Codazzi and positive definite.
KahlerFromHessian kahler_form_from_hessian(const Connection& nabla, const Metric& g);

/// Pair of conjugate roots (p + sqrt(d))/q and (p - sqrt(d))/q with d not a
/// rational square.
struct QuadraticSurd {
  Rational p;
  Rational d;
  Rational q;
};

struct LambdaRoots {
  std::vector<Rational> rational;
  std::optional<QuadraticSurd> surd;
};

/// Roots of c l^2 - 2 l + 1 = 0 other than 0 and 1/2, that is
/// (2l - 1)/l^2 = c.
LambdaRoots solve_lambda(const Rational& c);

struct StatisticalData {
  Connection d;
  Rational c;
};

/// Inverse of cone_extend: splits nabla on the complement of rho into its
/// base part D and a rho-component that must equal -c g(X, Y).
StatisticalData extract_statistical(const Connection& nabla, const Matrix& base_metric, Index rho);

struct Rescaled {
  Connection d;
  Metric g;
  Rational c;
};

/// (D, g, c) -> (D, s g, c / s), s > 0.
Rescaled rescale_metric(const Connection& d, const Metric& g, const Rational& c, const Rational& s);

}  // namespace hesslie
