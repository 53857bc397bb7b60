#include "hesslie/rational.hpp"

#include <cctype>
#include <ostream>

namespace hesslie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::NotAlmostComplex: return "NotAlmostComplex";
    case ErrorKind::NotHessian: return "NotHessian";
    case ErrorKind::ZeroCurvature: return "ZeroCurvature";
    case ErrorKind::NoRealSolution: return "NoRealSolution";
    case ErrorKind::NotStatistical: return "NotStatistical";
    case ErrorKind::CurvatureMismatch: return "CurvatureMismatch";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::NonPositiveT: return "NonPositiveT";
    case ErrorKind::NotConical: return "NotConical";
    case ErrorKind::MissingRadiant: return "MissingRadiant";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Rational::Rational(long p, long q) : Rational(mpz_class(p), mpz_class(q)) {}

Rational::Rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) {
    throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
  }
  v_ = mpq_class(p, q);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "division by zero");
  }
  v_ /= o.v_;
  return *this;
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) {
    return false;
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    return false;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class p;
  mpz_class q = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, p)
                      : parse_integer(text.substr(0, slash), p) &&
                            parse_integer(text.substr(slash + 1), q);
  if (!ok) {
    throw Error(ErrorKind::ValidationError, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

bool Rational::is_square() const {
  if (sign() < 0) {
    return false;
  }
  return mpz_perfect_square_p(v_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den_mpz_t()) != 0;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational make_rational(long p, long q) { return Rational(p, q); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) {
    out *= r;
  }
  return out;
}

Rational sqrt_exact(const Rational& r) {
  if (!r.is_square()) {
    throw Error(ErrorKind::ValidationError, r.str() + " is not a rational square");
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), r.raw().get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(num, den);
}

}  // namespace hesslie
