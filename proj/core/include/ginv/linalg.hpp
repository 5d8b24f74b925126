#pragma once

#include <cstddef>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

/// Reduced row-echelon form together with the row operations that produced it.
struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  /// Invertible, with transform * input == rref.
  Matrix transform;
};

/// Gauss-Jordan elimination. Pivots are taken in the leftmost remaining
/// column from the first row holding a nonzero entry, so the result is a
/// deterministic function of the input.
RrefResult rref(const Matrix& a);

/// Same elimination without accumulating the transform.
std::size_t rank(const Matrix& a);

/// Fraction-free (Bareiss) determinant. Requires a square matrix.
Scalar determinant(const Matrix& a);

/// Exact inverse. Throws SingularMatrixError when the determinant is zero.
Matrix inverse(const Matrix& a);

/// R(a) is a subspace of R(b): rank([b | a]) == rank(b).
bool subspace_leq(const Matrix& a, const Matrix& b);

/// R(a) == R(b), tested as two inclusions.
bool same_range(const Matrix& a, const Matrix& b);

/// Columns form a basis of N(a); a.cols() x 0 when the null space is trivial.
Matrix null_space_basis(const Matrix& a);

/// a = f * g with f full column rank and g full row rank.
struct FullRankFactorization {
  Matrix f;
  Matrix g;
  std::size_t rank = 0;
};

/// f is the pivot columns of a, g the nonzero rows of rref(a).
FullRankFactorization full_rank_factorization(const Matrix& a);

/// Moore-Penrose inverse of an arbitrary (possibly rectangular) matrix via
/// g* (g g*)^-1 (f* f)^-1 f*. Not self-verifying; see theta::moore_penrose.
Matrix pseudo_inverse(const Matrix& a);

}  // namespace ginv
