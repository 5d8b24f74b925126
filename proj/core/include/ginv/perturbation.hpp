#pragma once

#include <optional>

#include "ginv/matrix.hpp"

namespace ginv {

/// Which defining equation set the supplied inverse of T satisfied.
enum class Characterization {
  /// {1,2,3,6,7}: the core inverse.
  kCoreOperator,
  /// {1,3,7} only. Unreachable for matrices, where the two sets coincide, but
  /// recorded so a supplied inverse is never silently relabelled.
  kCoreMatrix,
};

/// T, its perturbation dT, the perturbed matrix T + dT and a {1,3,7}-inverse of T.
struct PerturbationCase {
  Matrix t;
  Matrix delta_t;
  Matrix t_bar;
  Matrix t_core;
  Characterization characterization = Characterization::kCoreOperator;

  /// Computes the core inverse of t. Throws IndexError when index(t) >= 2.
  static PerturbationCase make(Matrix t, Matrix delta_t);
  /// Uses a caller-supplied inverse; it must satisfy equations (1),(3),(7).
  static PerturbationCase with_inverse(Matrix t, Matrix delta_t, Matrix t_inverse);
};

/// B = T^core (I + dT T^core)^-1 = (I + T^core dT)^-1 T^core.
/// Both forms are evaluated and compared exactly. Throws SingularMatrixError
/// when det(I + T^core dT) = 0.
Matrix simplest_expression(const Matrix& t_core, const Matrix& delta_t);

/// The four conditions of the range-preservation chain, each evaluated on
/// its own.
struct RangeConditions {
  bool range_subset = false;           // R(T + dT) contained in R(T)
  std::optional<bool> range_equal;     // R(T + dT) == R(T); only when I + T^core dT is invertible
  bool left = false;                   // T T^core dT == dT
  bool right = false;                  // T^core T dT == dT
};

RangeConditions range_conditions(const Matrix& t, const Matrix& t_core, const Matrix& delta_t);

/// Float operator 2-norm checks on B, with relative slack kBoundSlack.
struct BoundReport {
  static constexpr double kBoundSlack = 1e-9;

  double norm_t_core = 0;
  double norm_tcore_dt = 0;
  double norm_resolvent = 0;  // ||(I + T^core dT)^-1||
  double norm_b = 0;
  double norm_b_minus_tcore = 0;

  bool b_bound_ok = false;           // ||B|| <= ||T^core|| ||resolvent||
  bool difference_bound_ok = false;  // ||B - T^core|| <= ||T^core|| ||resolvent|| ||T^core dT||

  bool sandwich_applicable = false;  // ||T^core dT|| < 1 in float
  bool sandwich_certified = false;   // exact Frobenius certificate of the same
  bool sandwich_lower_ok = true;     // ||T^core|| / (1 + ||T^core dT||) <= ||B||
  bool sandwich_upper_ok = true;     // ||B|| <= ||T^core|| / (1 - ||T^core dT||)

  // The same inequalities with every norm replaced by the Frobenius norm.
  double frobenius_t_core = 0;
  double frobenius_tcore_dt = 0;
  double frobenius_resolvent = 0;
  double frobenius_b = 0;
  double frobenius_b_minus_tcore = 0;
  bool frobenius_bounds_ok = false;

  bool satisfied() const {
    return b_bound_ok && difference_bound_ok && sandwich_lower_ok && sandwich_upper_ok;
  }
};

/// `b` must be simplest_expression(t_core, delta_t).
BoundReport norm_bounds(const Matrix& t_core, const Matrix& delta_t, const Matrix& b);

struct PerturbationVerdict {
  Characterization characterization = Characterization::kCoreOperator;
  bool invertible = false;
  std::optional<Matrix> b;

  bool condition_range_subset = false;
  std::optional<bool> condition_range_equal;
  bool condition_left = false;
  bool condition_right = false;

  /// B satisfies (1),(2),(3),(6),(7) for T + dT, checked from the equations.
  bool is_core_of_tbar = false;
  /// B satisfies (1),(3),(7) for T + dT.
  bool is_137_inverse_of_tbar = false;
  std::optional<Matrix> tbar_b;

  double norm_t_core = 0;
  double norm_tcore_dt = 0;
  std::optional<BoundReport> bounds;
  bool sandwich_applicable = false;
  bool bounds_satisfied = true;

  /// Common value of the conditions; meaningful when invertible.
  bool conditions_hold() const { return condition_left; }
};

/// Full report for one case. Every equivalence that must hold is asserted;
/// a mismatch throws TheoremFalsificationError naming the broken link.
/// A singular I + T^core dT is not an error: the verdict has invertible=false,
/// no B, and the exact condition fields still filled in.
PerturbationVerdict analyze(const PerturbationCase& c);

}  // namespace ginv
