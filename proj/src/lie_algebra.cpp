#include "hesslie/lie_algebra.hpp"

namespace hesslie {

namespace {

constexpr Variance kCo = Variance::Covariant;
constexpr Variance kContra = Variance::Contravariant;

void require_dim(const LieAlgebra& algebra, Index n, const char* what) {
  if (algebra.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has length " + std::to_string(n) +
                                                  ", algebra dimension is " + std::to_string(algebra.dim()));
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, Tensor<Rational> structure)
    : labels_(std::move(labels)), c_(std::move(structure)) {
  const Index n = dim();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "Lie algebra must have positive dimension");
  if (c_.shape() != std::vector<Index>{n, n, n}) {
    throw Error(ErrorKind::ShapeMismatch, "structure constants must have shape (dim, dim, dim)");
  }
  if (c_.variance() != std::vector<Variance>{kCo, kCo, kContra}) {
    throw Error(ErrorKind::ShapeMismatch, "structure constants must be (co, co, contra)");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!(c_(i, j, k) == -c_(j, i, k))) {
          throw Error(ErrorKind::NotSymmetric, "bracket is not antisymmetric at [" + labels_[static_cast<std::size_t>(i)] +
                                                   ", " + labels_[static_cast<std::size_t>(j)] + "]");
        }
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> labels) {
  const auto n = static_cast<Index>(labels.size());
  return LieAlgebra(std::move(labels), Tensor<Rational>::cube(n, {kCo, kCo, kContra}));
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels, const std::vector<BasisBracket>& brackets) {
  const auto n = static_cast<Index>(labels.size());
  auto c = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  for (const auto& b : brackets) {
    if (b.value.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket value has wrong length");
    for (Index k = 0; k < n; ++k) {
      c(b.i, b.j, k) = b.value(k);
      c(b.j, b.i, k) = -b.value(k);
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

Vector LieAlgebra::basis_vector(Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = 1;
  return v;
}

Vector LieAlgebra::bracket_of_basis(Index i, Index j) const {
  Vector v(dim());
  for (Index k = 0; k < dim(); ++k) v(k) = c_(i, j, k);
  return v;
}

Matrix LieAlgebra::ad(Index i) const {
  Matrix m(dim(), dim());
  for (Index j = 0; j < dim(); ++j)
    for (Index k = 0; k < dim(); ++k) m(k, j) = c_(i, j, k);
  return m;
}

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y) {
  require_dim(algebra, x.size(), "first argument");
  require_dim(algebra, y.size(), "second argument");
  const Index n = algebra.dim();
  Vector out = Vector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      const Rational w = x(i) * y(j);
      for (Index k = 0; k < n; ++k) out(k) += w * algebra.structure()(i, j, k);
    }
  }
  return out;
}

Vector jacobiator(const LieAlgebra& algebra, Index i, Index j, Index k) {
  const Vector ei = algebra.basis_vector(i);
  const Vector ej = algebra.basis_vector(j);
  const Vector ek = algebra.basis_vector(k);
  return bracket(algebra, algebra.bracket_of_basis(i, j), ek) + bracket(algebra, algebra.bracket_of_basis(j, k), ei) +
         bracket(algebra, algebra.bracket_of_basis(k, i), ej);
}

JacobiResult jacobi_check(const LieAlgebra& algebra) {
  const Index n = algebra.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vector r = jacobiator(algebra, i, j, k);
        if (!is_zero(r)) return {JacobiViolation{i, j, k, std::move(r)}};
      }
  return {};
}

KForm::KForm(Tensor<Rational> coefficients) : t_(std::move(coefficients)) {
  const Index k = t_.rank();
  if (k < 1 || k > 3) throw Error(ErrorKind::UnsupportedDegree, "forms of degree " + std::to_string(k) + " are not supported");
  for (Index a = 0; a < k; ++a) {
    if (t_.variance()[static_cast<std::size_t>(a)] != kCo || t_.shape()[static_cast<std::size_t>(a)] != t_.shape()[0]) {
      throw Error(ErrorKind::ShapeMismatch, "form coefficients must be covariant on a single basis");
    }
  }
  for (Index a = 0; a < k; ++a)
    for (Index b = a + 1; b < k; ++b) t_ = t_.with_symmetry({a, b, true});
}

KForm KForm::zero(Index dim, int degree) {
  if (degree < 1 || degree > 3) throw Error(ErrorKind::UnsupportedDegree, "forms of degree " + std::to_string(degree) + " are not supported");
  return KForm(Tensor<Rational>::cube(dim, std::vector<Variance>(static_cast<std::size_t>(degree), kCo)));
}

KForm KForm::covector(Index dim, Index i) {
  auto t = Tensor<Rational>::cube(dim, {kCo});
  t(i) = 1;
  return KForm(std::move(t));
}

KForm KForm::covector(const Vector& coefficients) {
  return KForm(Tensor<Rational>::from_vector(coefficients, kCo));
}

KForm KForm::two_form(Index dim, const std::vector<std::pair<std::pair<Index, Index>, Rational>>& entries) {
  auto t = Tensor<Rational>::cube(dim, {kCo, kCo});
  for (const auto& [ij, value] : entries) {
    const auto [i, j] = ij;
    if (i == j && !value.is_zero()) throw Error(ErrorKind::NotSymmetric, "two-form has a diagonal entry");
    t(i, j) += value;
    t(j, i) -= value;
  }
  return KForm(std::move(t));
}

Rational KForm::evaluate(const std::vector<Vector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree()) {
    throw Error(ErrorKind::ShapeMismatch, "form of degree " + std::to_string(degree()) + " given " +
                                              std::to_string(vectors.size()) + " arguments");
  }
  Tensor<Rational> acc = t_;
  for (const auto& v : vectors) {
    if (v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "argument length differs from form dimension");
    acc = contract(acc, Tensor<Rational>::from_vector(v, kContra), {{0, 0}});
  }
  return acc.entries()[0];
}

Vector KForm::as_vector() const {
  if (degree() != 1) throw Error(ErrorKind::UnsupportedDegree, "only 1-forms convert to a coefficient vector");
  Vector v(dim());
  for (Index i = 0; i < dim(); ++i) v(i) = t_(i);
  return v;
}

KForm operator+(const KForm& a, const KForm& b) { return KForm(a.t_ + b.t_); }
KForm operator-(const KForm& a, const KForm& b) { return KForm(a.t_ - b.t_); }
KForm operator*(const Rational& s, const KForm& a) { return KForm(a.t_ * s); }

KForm ce_d(const LieAlgebra& algebra, const KForm& form) {
  require_dim(algebra, form.dim(), "form");
  const Index n = algebra.dim();
  const auto& c = algebra.structure();
  if (form.degree() == 1) {
    auto out = Tensor<Rational>::cube(n, {kCo, kCo});
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Rational s;
        for (Index k = 0; k < n; ++k) s -= c(a, b, k) * form(k);
        out(a, b) = s;
      }
    return KForm(std::move(out));
  }
  if (form.degree() == 2) {
    auto out = Tensor<Rational>::cube(n, {kCo, kCo, kCo});
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index e = 0; e < n; ++e) {
          Rational s;
          for (Index k = 0; k < n; ++k) {
            s -= c(a, b, k) * form(k, e);
            s += c(a, e, k) * form(k, b);
            s -= c(b, e, k) * form(k, a);
          }
          out(a, b, e) = s;
        }
    return KForm(std::move(out));
  }
  throw Error(ErrorKind::UnsupportedDegree, "differential of a " + std::to_string(form.degree()) + "-form is not supported");
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "wedge factors live on different dimensions");
  const Index n = a.dim();
  if (a.degree() == 1 && b.degree() == 1) {
    auto out = Tensor<Rational>::cube(n, {kCo, kCo});
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) out(x, y) = a(x) * b(y) - a(y) * b(x);
    return KForm(std::move(out));
  }
  if (a.degree() + b.degree() == 3) {
    const KForm& t = a.degree() == 1 ? a : b;
    const KForm& w = a.degree() == 1 ? b : a;
    auto out = Tensor<Rational>::cube(n, {kCo, kCo, kCo});
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z) out(x, y, z) = t(x) * w(y, z) - t(y) * w(x, z) + t(z) * w(x, y);
    return KForm(std::move(out));
  }
  throw Error(ErrorKind::UnsupportedDegree, "wedge of degrees " + std::to_string(a.degree()) + " and " +
                                                std::to_string(b.degree()) + " exceeds 3");
}

}  // namespace hesslie
