#pragma once

#include <cstdint>
#include <random>

#include "hesslie/catalog.hpp"

namespace fixtures {

using namespace hesslie;

inline Vector vec(std::initializer_list<Rational> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Matrix diag(std::initializer_list<Rational> xs) {
  const auto n = static_cast<Index>(xs.size());
  Matrix m = Matrix::Zero(n, n);
  Index i = 0;
  for (const auto& x : xs) m(i, i) = x, ++i;
  return m;
}

/// [e1,e2] = e1, [e1,e3] = e3: antisymmetric but not Lie.
inline LieAlgebra jacobi_violating() {
  return LieAlgebra::from_brackets({"e1", "e2", "e3"}, {{0, 1, vec({1, 0, 0})}, {0, 2, vec({0, 0, 1})}});
}

/// Deterministic source of small rationals. Uses raw mt19937 output so the
/// stream is identical across standard libraries.
class RationalSource {
public:
  explicit RationalSource(std::uint32_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint32_t>(hi - lo + 1));
  }
  Rational rational(long bound = 5, long max_den = 4) { return Rational(integer(-bound, bound), integer(1, max_den)); }
  Rational positive(long bound = 10, long max_den = 4) { return Rational(integer(1, bound), integer(1, max_den)); }
  Vector vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational();
    return v;
  }
  Matrix matrix(Index r, Index c) {
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }

private:
  std::mt19937 gen_;
};

/// The three worked bases with their curvature: clan (c = -1), su2 (1), so2 (1).
struct Base {
  std::string name;
  CatalogEntry entry;
};

inline std::vector<Base> printed_bases() {
  return {{"clan-triangular", get_example("clan-triangular")}, {"su2", get_example("su2")}, {"so2", get_example("so2")}};
}

}  // namespace fixtures
