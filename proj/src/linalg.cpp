#include "hesslie/linalg.hpp"

namespace hesslie {

template Rational determinant<Rational>(Matrix);
template bool is_positive_definite<Rational>(const Matrix&);
template bool is_positive_definite<Rational>(const Tensor<Rational>&);
template LinearSolution<Rational> solve_exact<Rational>(const Matrix&, const Vector&);
template std::optional<Vector> kernel_vector<Rational>(const Matrix&);

}  // namespace hesslie
