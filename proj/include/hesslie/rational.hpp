#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include <Eigen/Core>

#include "hesslie/error.hpp"

namespace hesslie {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin value wrapper over GMP so that no expression templates
/// leak into Eigen kernels.
class Rational {
public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) : v_(from_integral(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long p, long q);
  Rational(const mpz_class& p, const mpz_class& q);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q"; throws ValidationError on malformed text and
  /// ZeroDenominator on q = 0.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_square() const;

  /// Canonical "p/q" text, or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  template <std::integral T>
  static mpq_class from_integral(T n) {
    if constexpr (std::is_signed_v<T>) {
      return mpq_class(static_cast<long>(n));
    } else {
      return mpq_class(static_cast<unsigned long>(n));
    }
  }

  mpq_class v_{0};
};

Rational make_rational(long p, long q);
Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned e);
/// Exact square root when r is the square of a rational; throws otherwise.
Rational sqrt_exact(const Rational& r);

inline namespace literals {
inline Rational operator""_q(unsigned long long n) { return Rational(static_cast<long>(n)); }
}  // namespace literals

}  // namespace hesslie

namespace Eigen {

template <>
struct NumTraits<hesslie::Rational> : GenericNumTraits<hesslie::Rational> {
  using Real = hesslie::Rational;
  using NonInteger = hesslie::Rational;
  using Nested = hesslie::Rational;
  using Literal = hesslie::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 40
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
