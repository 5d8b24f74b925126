#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include "ginv/matrix.hpp"

namespace ginv {

/// Nearest double-precision complex matrix.
Eigen::MatrixXcd to_float(const Matrix& a);

/// Operator 2-norm (largest singular value), evaluated in double precision.
double spectral_norm(const Matrix& a);

/// Exact sum of |a_ij|^2. Since ||a||_2^2 <= this value, a result below one
/// certifies ||a||_2 < 1 without rounding.
mpq_class frobenius_norm_sq(const Matrix& a);

}  // namespace ginv
