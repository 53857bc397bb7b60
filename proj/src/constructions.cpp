#include "hesslie/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hesslie {

namespace {

constexpr Variance kCo = Variance::Covariant;
constexpr Variance kContra = Variance::Contravariant;

std::string describe(const LieAlgebra& algebra, const std::vector<Index>& idx) {
  std::string out = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) out += ", ";
    out += algebra.labels()[static_cast<std::size_t>(idx[k])];
  }
  return out + ")";
}

/// Throws NotStatistical naming the first failing condition.
void require_statistical(const Connection& d, const Metric& g) {
  const auto report = classify({d.base(), &d, &g});
  if (*report.is_statistical) return;
  std::string what;
  if (!*report.is_torsion_free) what = "connection has torsion";
  else if (!*report.is_codazzi) what = "D g is not totally symmetric";
  else what = "metric is not positive definite";
  for (const auto& w : report.witnesses) {
    if (w.claim == "torsion" || w.claim == "codazzi" || w.claim.starts_with("positive_definite")) {
      what += " at " + (w.claim.starts_with("positive_definite") ? std::string("leading block ") + std::to_string(w.indices[0])
                                                                  : describe(d.base(), w.indices));
      break;
    }
  }
  throw Error(ErrorKind::NotStatistical, what);
}

}  // namespace

Matrix standard_complex_structure(Index half) {
  Matrix j = Matrix::Zero(2 * half, 2 * half);
  for (Index i = 0; i < half; ++i) {
    j(half + i, i) = 1;   // J(e_i + 0) = 0 + e_i
    j(i, half + i) = -1;  // J(0 + e_i) = -e_i + 0
  }
  return j;
}

DoubledAlgebra semidirect_double(const Connection& connection) {
  const LieAlgebra& base = connection.base();
  const Index n = base.dim();
  std::vector<std::string> labels;
  for (const auto& l : base.labels()) labels.push_back(l + "1");
  for (const auto& l : base.labels()) labels.push_back(l + "2");

  auto c = Tensor<Rational>::cube(2 * n, {kCo, kCo, kContra});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        c(i, j, k) = base.structure()(i, j, k);
        c(i, n + j, n + k) = connection.gamma()(i, j, k);
        c(n + j, i, n + k) = -connection.gamma()(i, j, k);
      }
  LieAlgebra algebra(std::move(labels), std::move(c));
  ComplexStructure j(algebra, standard_complex_structure(n));
  auto jac = jacobi_check(algebra);
  return DoubledAlgebra{std::move(algebra), connection, std::move(j), n, std::move(jac)};
}

KForm hessian_two_form(Index half, const Matrix& g) {
  if (g.rows() != half || g.cols() != half) throw Error(ErrorKind::DimensionMismatch, "metric does not match the half dimension");
  auto t = Tensor<Rational>::cube(2 * half, {kCo, kCo});
  for (Index i = 0; i < half; ++i)
    for (Index j = 0; j < half; ++j) {
      t(i, half + j) = g(i, j);
      t(half + j, i) = -g(i, j);
    }
  return KForm(std::move(t));
}

ConeExtension cone_extend(const Connection& d, const Metric& g, const Rational& c) {
  if (!(d.base() == g.base())) throw Error(ErrorKind::DimensionMismatch, "connection and metric live on different algebras");
  if (c.is_zero()) throw Error(ErrorKind::ZeroCurvature, "cone extension needs nonzero curvature");
  require_statistical(d, g);

  const auto fit = constant_curvature(d, g);
  if (const auto* v = std::get_if<CurvatureValue>(&fit)) {
    if (!(v->c == c)) {
      throw Error(ErrorKind::CurvatureMismatch, "fitted curvature " + v->c.str() + " differs from supplied " + c.str());
    }
  } else if (const auto* none = std::get_if<NoConstantCurvature>(&fit)) {
    throw Error(ErrorKind::CurvatureMismatch,
                "curvature is not constant; first mismatch at " + describe(d.base(), {none->i, none->j, none->l}));
  }

  const LieAlgebra& base = d.base();
  const Index n = base.dim();
  const Index rho = n;
  auto labels = base.labels();
  labels.push_back("rho");
  auto structure = Tensor<Rational>::cube(n + 1, {kCo, kCo, kContra});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) structure(i, j, k) = base.structure()(i, j, k);
  LieAlgebra algebra(std::move(labels), std::move(structure));

  auto gamma = Tensor<Rational>::cube(n + 1, {kCo, kCo, kContra});
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) gamma(i, j, k) = d.gamma()(i, j, k);
      gamma(i, j, rho) = -c * g.matrix()(i, j);
    }
    gamma(i, rho, i) = 1;
    gamma(rho, i, i) = 1;
  }
  gamma(rho, rho, rho) = 1;
  Connection nabla(algebra, std::move(gamma));

  if (!torsion(nabla).is_zero() || !curvature(nabla).is_zero()) {
    throw std::logic_error("cone connection failed its flatness certificate");
  }

  ConeExtension cone{std::move(algebra), std::move(nabla), rho, c, d, g, std::nullopt};
  if (c < 0) {
    const Rational t = Rational(-1) / c;
    const Metric gt = cone_metric(cone, t);
    cone.hessian_at_critical_t = *classify({cone.algebra, &cone.nabla, &gt}).is_hessian;
  }
  return cone;
}

Metric cone_metric(const ConeExtension& cone, const Rational& t) {
  const Index n = cone.base_metric.dim();
  Matrix g = Matrix::Zero(n + 1, n + 1);
  g.topLeftCorner(n, n) = cone.base_metric.matrix();
  g(cone.rho, cone.rho) = t;
  return Metric(cone.algebra, std::move(g));
}

LckFamily lck_family(const Connection& d, const Metric& g, const Rational& c, const Rational& t) {
  if (!(t > 0)) throw Error(ErrorKind::NonPositiveT, "t must be positive, got " + t.str());
  ConeExtension cone = cone_extend(d, g, c);
  DoubledAlgebra doubled = semidirect_double(cone.nabla);
  const Index half = doubled.half;
  const Index dim = 2 * half;

  // g extended by zero on rho, then t rho^1 ^ rho^2 added separately.
  Matrix extended = Matrix::Zero(half, half);
  extended.topLeftCorner(half - 1, half - 1) = g.matrix();
  const KForm rho1 = KForm::covector(dim, cone.rho);
  const KForm rho2 = KForm::covector(dim, half + cone.rho);
  KForm omega = hessian_two_form(half, extended) + t * wedge(rho1, rho2);
  KForm theta = -(Rational(1) + c * t) * rho1;

  const bool identity = ce_d(doubled.algebra, omega) == wedge(theta, omega);
  const bool closed = ce_d(doubled.algebra, theta).is_zero();
  StructureReport report = classify({doubled.algebra, nullptr, nullptr, &doubled.j, &omega});
  return LckFamily{std::move(cone), std::move(doubled), std::move(omega), std::move(theta),
                   std::move(report), identity, closed};
}

KahlerFromHessian kahler_form_from_hessian(const Connection& nabla, const Metric& g) {
  const auto check = classify({nabla.base(), &nabla, &g});
  if (!*check.is_hessian) {
    std::string failed;
    if (!*check.is_flat) failed = "not flat";
    else if (!*check.is_torsion_free) failed = "not torsion-free";
    else if (!*check.is_codazzi) failed = "nabla g is not totally symmetric";
    else failed = "metric is not positive definite";
    throw Error(ErrorKind::NotHessian, failed);
  }
  DoubledAlgebra doubled = semidirect_double(nabla);
  KForm omega = hessian_two_form(doubled.half, g.matrix());
  StructureReport report = classify({doubled.algebra, nullptr, nullptr, &doubled.j, &omega});
  return KahlerFromHessian{std::move(doubled), std::move(omega), std::move(report)};
}

LambdaRoots solve_lambda(const Rational& c) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroCurvature, "lambda equation needs nonzero c");
  if (c > 1) throw Error(ErrorKind::NoRealSolution, "discriminant 1 - c is negative for c = " + c.str());

  // c l^2 - 2 l + 1 = 0  =>  l = (1 +- sqrt(1 - c)) / c
  const Rational disc = Rational(1) - c;
  LambdaRoots out;
  auto admissible = [](const Rational& l) { return !l.is_zero() && !(l == make_rational(1, 2)); };
  if (disc.is_square()) {
    const Rational root = sqrt_exact(disc);
    std::vector<Rational> candidates{(Rational(1) - root) / c, (Rational(1) + root) / c};
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& l : candidates)
      if (admissible(l)) out.rational.push_back(std::move(l));
  } else {
    out.surd = QuadraticSurd{Rational(1), disc, c};
  }
  return out;
}

StatisticalData extract_statistical(const Connection& nabla, const Matrix& base_metric, Index rho) {
  const LieAlgebra& algebra = nabla.base();
  const Index total = algebra.dim();
  if (rho < 0 || rho >= total) throw Error(ErrorKind::MissingRadiant, "radiant index out of range");
  const Index n = total - 1;
  if (base_metric.rows() != n || base_metric.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "base metric must cover the complement of rho");
  }

  std::vector<Index> base;
  for (Index i = 0; i < total; ++i)
    if (i != rho) base.push_back(i);

  for (Index i = 0; i < total; ++i) {
    if (!is_zero(algebra.bracket_of_basis(rho, i))) throw Error(ErrorKind::MissingRadiant, "rho is not central");
    const Vector e = algebra.basis_vector(i);
    if (!(nabla.apply_basis(rho, i) == e) || !(nabla.apply_basis(i, rho) == e)) {
      throw Error(ErrorKind::MissingRadiant, "nabla rho is not the identity at " + algebra.labels()[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<std::string> labels;
  for (Index b : base) labels.push_back(algebra.labels()[static_cast<std::size_t>(b)]);
  auto structure = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  auto gamma = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  std::optional<Rational> c;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const auto ia = base[static_cast<std::size_t>(a)];
      const auto ib = base[static_cast<std::size_t>(b)];
      if (!algebra.structure()(ia, ib, rho).is_zero()) {
        throw Error(ErrorKind::NotConical, "base is not a subalgebra: [" + algebra.labels()[static_cast<std::size_t>(ia)] +
                                               ", " + algebra.labels()[static_cast<std::size_t>(ib)] + "] has a rho component");
      }
      for (Index k = 0; k < n; ++k) {
        structure(a, b, k) = algebra.structure()(ia, ib, base[static_cast<std::size_t>(k)]);
        gamma(a, b, k) = nabla.gamma()(ia, ib, base[static_cast<std::size_t>(k)]);
      }
      const Rational& g_ab = base_metric(a, b);
      if (!c && !g_ab.is_zero()) c = -nabla.gamma()(ia, ib, rho) / g_ab;
    }
  if (!c) throw Error(ErrorKind::NotConical, "base metric vanishes; curvature cannot be read off");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const auto ia = base[static_cast<std::size_t>(a)];
      const auto ib = base[static_cast<std::size_t>(b)];
      if (!(nabla.gamma()(ia, ib, rho) == -*c * base_metric(a, b))) {
        throw Error(ErrorKind::NotConical, "rho-component is not proportional to g at " + describe(algebra, {ia, ib}));
      }
    }
  LieAlgebra base_algebra(std::move(labels), std::move(structure));
  return StatisticalData{Connection(std::move(base_algebra), std::move(gamma)), *c};
}

Rescaled rescale_metric(const Connection& d, const Metric& g, const Rational& c, const Rational& s) {
  if (!(s > 0)) throw Error(ErrorKind::NonPositiveScale, "scale must be positive, got " + s.str());
  require_statistical(d, g);
  const auto fit = constant_curvature(d, g);
  if (const auto* v = std::get_if<CurvatureValue>(&fit); v != nullptr && !(v->c == c)) {
    throw Error(ErrorKind::CurvatureMismatch, "fitted curvature " + v->c.str() + " differs from supplied " + c.str());
  }
  if (std::holds_alternative<NoConstantCurvature>(fit)) {
    throw Error(ErrorKind::CurvatureMismatch, "curvature is not constant");
  }
  return Rescaled{d, g.scaled(s), c / s};
}

}  // namespace hesslie
