#pragma once

#include <vector>

#include "mfk/ratexpr.hpp"

namespace mfk {

using Matrix = std::vector<std::vector<RatExpr>>;

// Rank over the rational-function field (generic rank), by exact fraction-free
// elimination on the denominator-cleared polynomial matrix.
int generic_rank(const Matrix& m);

// Exact inverse; throws SingularMatrix when the generic rank is deficient.
Matrix matrix_inverse(const Matrix& m);

Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix identity_matrix(int n);

} // namespace mfk
