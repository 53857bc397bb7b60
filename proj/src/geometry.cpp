#include "hesslie/geometry.hpp"

#include <algorithm>

namespace hesslie {

namespace {

constexpr Variance kCo = Variance::Covariant;
constexpr Variance kContra = Variance::Contravariant;

void require_same_base(const LieAlgebra& a, const LieAlgebra& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " is defined on a different algebra");
  }
}

Vector scalar_vector(const Rational& r) {
  Vector v(1);
  v(0) = r;
  return v;
}

/// First leading minor that is not positive, with a nonzero witness vector
/// when that minor vanishes.
std::optional<Witness> definiteness_witness(const Matrix& m, const std::string& claim) {
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k] > 0) continue;
    const auto size = static_cast<Index>(k + 1);
    if (!minors[k].is_zero()) return Witness{claim, {size}, scalar_vector(minors[k]), std::nullopt};
    Matrix block = m.topLeftCorner(size, size);
    return Witness{claim + ".kernel", {size}, *kernel_vector(block), std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

Connection::Connection(LieAlgebra base, Tensor<Rational> gamma) : base_(std::move(base)), gamma_(std::move(gamma)) {
  const Index n = base_.dim();
  if (gamma_.shape() != std::vector<Index>{n, n, n}) {
    throw Error(ErrorKind::ShapeMismatch, "connection coefficients must have shape (dim, dim, dim)");
  }
  if (gamma_.variance() != std::vector<Variance>{kCo, kCo, kContra}) {
    throw Error(ErrorKind::ShapeMismatch, "connection coefficients must be (co, co, contra)");
  }
}

Connection Connection::zero(LieAlgebra base) {
  const Index n = base.dim();
  return Connection(std::move(base), Tensor<Rational>::cube(n, {kCo, kCo, kContra}));
}

Matrix Connection::operator_of(Index i) const {
  const Index n = dim();
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) m(k, j) = gamma_(i, j, k);
  return m;
}

Matrix Connection::operator_of(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "direction has wrong length");
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (!x(i).is_zero()) m += operator_of(i) * x(i);
  return m;
}

Vector Connection::apply(const Vector& x, const Vector& y) const {
  if (y.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "argument has wrong length");
  return operator_of(x) * y;
}

Vector Connection::apply_basis(Index i, Index j) const {
  Vector v(dim());
  for (Index k = 0; k < dim(); ++k) v(k) = gamma_(i, j, k);
  return v;
}

Metric::Metric(LieAlgebra base, Matrix g) : base_(std::move(base)), g_(std::move(g)) {
  if (g_.rows() != base_.dim() || g_.cols() != base_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "metric matrix must be dim x dim");
  }
  if (!is_symmetric(g_)) throw Error(ErrorKind::NotSymmetric, "metric matrix is not symmetric");
}

ComplexStructure::ComplexStructure(LieAlgebra base, Matrix j) : base_(std::move(base)), j_(std::move(j)) {
  const Index n = base_.dim();
  if (j_.rows() != n || j_.cols() != n) throw Error(ErrorKind::DimensionMismatch, "complex structure must be dim x dim");
  const Matrix sq = j_ * j_;
  if (!(sq == Matrix(-Matrix::Identity(n, n)))) {
    throw Error(ErrorKind::NotAlmostComplex, "J^2 differs from -id");
  }
}

Tensor<Rational> torsion(const Connection& connection) {
  const Index n = connection.dim();
  const auto& c = connection.base().structure();
  const auto& g = connection.gamma();
  auto t = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) t(i, j, k) = g(i, j, k) - g(j, i, k) - c(i, j, k);
  return t;
}

Tensor<Rational> curvature(const Connection& connection) {
  const Index n = connection.dim();
  const auto& c = connection.base().structure();
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) ops.push_back(connection.operator_of(i));
  auto theta = Tensor<Rational>::cube(n, {kCo, kCo, kCo, kContra});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix m = ops[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(j)] -
                 ops[static_cast<std::size_t>(j)] * ops[static_cast<std::size_t>(i)];
      for (Index k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) m -= ops[static_cast<std::size_t>(k)] * c(i, j, k);
      for (Index l = 0; l < n; ++l)
        for (Index k = 0; k < n; ++k) theta(i, j, l, k) = m(k, l);
    }
  return theta;
}

Tensor<Rational> covariant_derivative(const Connection& connection, const Metric& metric) {
  require_same_base(connection.base(), metric.base(), "metric");
  const Index n = connection.dim();
  const Matrix& g = metric.matrix();
  auto out = Tensor<Rational>::cube(n, {kCo, kCo, kCo});
  for (Index i = 0; i < n; ++i) {
    // -(N^T g + g N) where N = nabla_{e_i}
    const Matrix nab = connection.operator_of(i);
    const Matrix d = -(nab.transpose() * g + g * nab);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(i, j, k) = d(j, k);
  }
  return out;
}

CodazziResult codazzi_check(const Connection& connection, const Metric& metric) {
  const auto dg = covariant_derivative(connection, metric);
  const Index n = connection.dim();
  // dg is symmetric in its last two slots, so swapping the first two covers
  // every permutation.
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Rational r = dg(i, j, k) - dg(j, i, k);
        if (!r.is_zero()) return {CodazziViolation{i, j, k, r}};
      }
  return {};
}

ConstantCurvature constant_curvature(const Connection& connection, const Metric& metric) {
  require_same_base(connection.base(), metric.base(), "metric");
  const Matrix& g = metric.matrix();
  if (determinant(g).is_zero()) throw Error(ErrorKind::DegenerateMetric, "metric is degenerate");
  const Index n = connection.dim();
  const auto theta = curvature(connection);

  // comparison(i, j, l) = g_jl e_i - g_il e_j
  auto comparison = [&](Index i, Index j, Index l) {
    Vector v = Vector::Zero(n);
    v(i) += g(j, l);
    v(j) -= g(i, l);
    return v;
  };
  auto theta_at = [&](Index i, Index j, Index l) {
    Vector v(n);
    for (Index k = 0; k < n; ++k) v(k) = theta(i, j, l, k);
    return v;
  };

  std::optional<Rational> fitted;
  for (Index i = 0; i < n && !fitted; ++i)
    for (Index j = 0; j < n && !fitted; ++j)
      for (Index l = 0; l < n && !fitted; ++l) {
        const Vector r = comparison(i, j, l);
        for (Index k = 0; k < n; ++k)
          if (!r(k).is_zero()) {
            fitted = theta(i, j, l, k) / r(k);
            break;
          }
      }

  const Rational c = fitted.value_or(Rational(0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        Vector residual = theta_at(i, j, l) - comparison(i, j, l) * c;
        if (!is_zero(residual)) return NoConstantCurvature{i, j, l, std::move(residual)};
      }
  if (!fitted) return CurvatureUnderdetermined{};
  return CurvatureValue{c};
}

Tensor<Rational> nijenhuis(const LieAlgebra& algebra, const ComplexStructure& j) {
  require_same_base(algebra, j.base(), "complex structure");
  const Index n = algebra.dim();
  auto out = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Vector x = algebra.basis_vector(a);
      const Vector y = algebra.basis_vector(b);
      const Vector jx = j.apply(x);
      const Vector jy = j.apply(y);
      const Vector value =
          bracket(algebra, x, y) + j.apply(bracket(algebra, jx, y) + bracket(algebra, x, jy)) - bracket(algebra, jx, jy);
      for (Index k = 0; k < n; ++k) out(a, b, k) = value(k);
    }
  return out;
}

std::vector<std::array<Index, 3>> sorted_triples(Index dim) {
  std::vector<std::array<Index, 3>> out;
  for (Index a = 0; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b)
      for (Index c = b + 1; c < dim; ++c) out.push_back({a, b, c});
  return out;
}

LeeFormSolution lee_form_solve(const LieAlgebra& algebra, const KForm& omega) {
  if (omega.degree() != 2) throw Error(ErrorKind::UnsupportedDegree, "Lee form equation needs a 2-form");
  const Index n = algebra.dim();
  const KForm d_omega = ce_d(algebra, omega);
  const auto triples = sorted_triples(n);
  const auto rows = static_cast<Index>(triples.size());

  // (theta ^ omega)(a,b,c) = theta_a w_bc - theta_b w_ac + theta_c w_ab
  Matrix a = Matrix::Zero(rows, n);
  Vector rhs(rows);
  for (Index r = 0; r < rows; ++r) {
    const auto [x, y, z] = triples[static_cast<std::size_t>(r)];
    a(r, x) += omega(y, z);
    a(r, y) -= omega(x, z);
    a(r, z) += omega(x, y);
    rhs(r) = d_omega(x, y, z);
  }

  LeeFormSolution out;
  const auto sol = solve_exact<Rational>(a, rhs);
  if (!sol.solution) {
    out.obstruction = sol.obstruction;
    out.obstruction_value = sol.obstruction->dot(rhs);
    return out;
  }
  out.theta = KForm::covector(*sol.solution);
  out.closed = ce_d(algebra, *out.theta).is_zero();
  return out;
}

bool StructureReport::has_witness(const std::string& claim) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) { return w.claim == claim; });
}

StructureReport classify(const ClassifyInput& input) {
  const LieAlgebra& algebra = input.algebra;
  const Index n = algebra.dim();
  StructureReport report;

  const auto jac = jacobi_check(algebra);
  report.is_lie = jac.passes();
  if (!jac.passes()) {
    const auto& v = *jac.violation;
    report.witnesses.push_back({"jacobi", {v.i, v.j, v.k}, v.residual, std::nullopt});
  }

  if (input.connection != nullptr) {
    const Connection& conn = *input.connection;
    require_same_base(algebra, conn.base(), "connection");

    const auto t = torsion(conn);
    report.is_torsion_free = t.is_zero();
    for (Index i = 0; i < n && !*report.is_torsion_free && !report.has_witness("torsion"); ++i)
      for (Index j = i + 1; j < n; ++j) {
        Vector r(n);
        for (Index k = 0; k < n; ++k) r(k) = t(i, j, k);
        if (!is_zero(r)) {
          report.witnesses.push_back({"torsion", {i, j}, r, std::nullopt});
          break;
        }
      }

    const auto theta = curvature(conn);
    report.is_flat = theta.is_zero();
    for (Index flat = 0; flat < theta.size() && !*report.is_flat; ++flat) {
      if (theta.entries()[static_cast<std::size_t>(flat)].is_zero()) continue;
      const auto idx = theta.unravel(flat);
      Vector r(n);
      for (Index k = 0; k < n; ++k) r(k) = theta(idx[0], idx[1], idx[2], k);
      report.witnesses.push_back({"curvature", {idx[0], idx[1], idx[2]}, r, std::nullopt});
      break;
    }
  }

  if (input.metric != nullptr) {
    const Metric& metric = *input.metric;
    require_same_base(algebra, metric.base(), "metric");
    report.is_positive_definite = is_positive_definite(metric.matrix());
    if (!*report.is_positive_definite) report.witnesses.push_back(*definiteness_witness(metric.matrix(), "positive_definite"));
  }

  if (input.connection != nullptr && input.metric != nullptr) {
    const auto cod = codazzi_check(*input.connection, *input.metric);
    report.is_codazzi = cod.passes();
    if (!cod.passes()) {
      const auto& v = *cod.violation;
      report.witnesses.push_back({"codazzi", {v.i, v.j, v.k}, scalar_vector(v.residual), std::nullopt});
    }
    report.is_statistical = *report.is_torsion_free && *report.is_codazzi && *report.is_positive_definite;
    report.is_hessian = *report.is_statistical && *report.is_flat;
    if (!determinant(input.metric->matrix()).is_zero()) {
      report.constant_curvature = constant_curvature(*input.connection, *input.metric);
      if (const auto* none = std::get_if<NoConstantCurvature>(&*report.constant_curvature)) {
        report.witnesses.push_back({"constant_curvature", {none->i, none->j, none->l}, none->residual, std::nullopt});
      }
    }
  }

  if (input.complex_structure != nullptr) {
    const auto nij = nijenhuis(algebra, *input.complex_structure);
    report.is_integrable = nij.is_zero();
    for (Index i = 0; i < n && !*report.is_integrable && !report.has_witness("nijenhuis"); ++i)
      for (Index j = i + 1; j < n; ++j) {
        Vector r(n);
        for (Index k = 0; k < n; ++k) r(k) = nij(i, j, k);
        if (!is_zero(r)) {
          report.witnesses.push_back({"nijenhuis", {i, j}, r, std::nullopt});
          break;
        }
      }
  }

  if (input.omega != nullptr) {
    const KForm& omega = *input.omega;
    if (omega.degree() != 2) throw Error(ErrorKind::UnsupportedDegree, "classification needs a 2-form");
    if (omega.dim() != n) throw Error(ErrorKind::DimensionMismatch, "form dimension differs from algebra");
    const KForm d_omega = ce_d(algebra, omega);
    report.is_closed = d_omega.is_zero();
    for (const auto& [a, b, c] : sorted_triples(n)) {
      if (*report.is_closed) break;
      if (!d_omega(a, b, c).is_zero()) {
        report.witnesses.push_back({"d_omega", {a, b, c}, scalar_vector(d_omega(a, b, c)), std::nullopt});
        break;
      }
    }

    if (input.complex_structure != nullptr) {
      const Matrix& j = input.complex_structure->matrix();
      Matrix w(n, n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) w(a, b) = omega(a, b);
      // h(a, b) = omega(e_a, J e_b)
      const Matrix h = w * j;
      if (!is_symmetric(h)) {
        report.is_compatible = false;
        for (Index a = 0; a < n && !report.has_witness("compatibility.symmetry"); ++a)
          for (Index b = a + 1; b < n; ++b)
            if (!(h(a, b) == h(b, a))) {
              report.witnesses.push_back({"compatibility.symmetry", {a, b}, scalar_vector(h(a, b) - h(b, a)), std::nullopt});
              break;
            }
      } else {
        report.is_compatible = is_positive_definite(h);
        if (!*report.is_compatible) report.witnesses.push_back(*definiteness_witness(h, "compatibility"));
      }

      const bool base_ok = *report.is_lie && *report.is_integrable && *report.is_compatible;
      report.is_kahler = base_ok && *report.is_closed;

      const auto lee = lee_form_solve(algebra, omega);
      if (lee.theta) {
        report.lee_form = lee.theta;
        if (!lee.closed) {
          const KForm d_theta = ce_d(algebra, *lee.theta);
          for (Index a = 0; a < n && !report.has_witness("lee_form.closed"); ++a)
            for (Index b = a + 1; b < n; ++b)
              if (!d_theta(a, b).is_zero()) {
                report.witnesses.push_back({"lee_form.closed", {a, b}, scalar_vector(d_theta(a, b)), std::nullopt});
                break;
              }
        }
      } else {
        report.witnesses.push_back({"lee_form.obstruction", {}, scalar_vector(lee.obstruction_value), lee.obstruction});
      }
      report.is_lck = base_ok && lee.theta.has_value() && lee.closed;
    }
  }
  return report;
}

}  // namespace hesslie
