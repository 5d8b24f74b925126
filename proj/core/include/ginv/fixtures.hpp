#pragma once

#include "ginv/matrix.hpp"

namespace ginv::fixtures {

/// Published 4x4 reference data. Both cases share the same T.
struct ReferenceCase {
  Matrix t;
  Matrix delta_t;
  Matrix t_bar;
  /// Core inverse of T.
  Matrix t_core;
  /// (I + T^core dT)^-1 T^core.
  Matrix expression;
};

/// dT keeps the range: the expression is the core inverse of T + dT.
ReferenceCase range_preserving();

/// dT moves the range while keeping rank and null space; the expression is
/// not the core inverse of T + dT.
ReferenceCase range_violating();

/// Core inverse of T + dT for the range-violating case.
Matrix range_violating_tbar_core();

/// Three vectors spanning R(T).
Matrix range_basis();

/// Rows of integers scaled by 1/den.
Matrix scaled(std::initializer_list<std::initializer_list<std::int64_t>> rows, std::int64_t den);

}  // namespace ginv::fixtures
