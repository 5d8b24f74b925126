#include "ginv/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ginv/error.hpp"
#include "ginv/linalg.hpp"
#include "ginv/norms.hpp"
#include "ginv/theta.hpp"

namespace ginv {

namespace {

void require_conformal(const Matrix& t, const Matrix& t_core, const Matrix& delta_t) {
  if (!t.is_square() || t_core.rows() != t.rows() || t_core.cols() != t.cols() ||
      delta_t.rows() != t.rows() || delta_t.cols() != t.cols()) {
    throw DimensionError("perturbation: T, its inverse and dT must be square of equal size");
  }
}

bool leq_rel(double lhs, double rhs) {
  return lhs <= rhs + BoundReport::kBoundSlack * std::max(std::abs(lhs), std::abs(rhs));
}

double frobenius(const Matrix& a) { return std::sqrt(frobenius_norm_sq(a).get_d()); }

void falsified(const char* link) {
  throw TheoremFalsificationError(std::string("equivalence violated: ") + link);
}

}  // namespace

PerturbationCase PerturbationCase::make(Matrix t, Matrix delta_t) {
  Matrix t_core = core_inverse(t);
  return with_inverse(std::move(t), std::move(delta_t), std::move(t_core));
}

PerturbationCase PerturbationCase::with_inverse(Matrix t, Matrix delta_t, Matrix t_inverse) {
  require_conformal(t, t_inverse, delta_t);
  if (!is_theta_inverse(ThetaSet::core_matrix(), t, t_inverse)) {
    throw std::invalid_argument("supplied inverse does not satisfy equations (1),(3),(7)");
  }
  const auto kind = is_theta_inverse(ThetaSet::core_operator(), t, t_inverse)
                        ? Characterization::kCoreOperator
                        : Characterization::kCoreMatrix;
  Matrix t_bar = t + delta_t;
  return {std::move(t), std::move(delta_t), std::move(t_bar), std::move(t_inverse), kind};
}

Matrix simplest_expression(const Matrix& t_core, const Matrix& delta_t) {
  if (!t_core.is_square() || delta_t.rows() != t_core.rows() || delta_t.cols() != t_core.cols()) {
    throw DimensionError("simplest_expression: operands must be square of equal size");
  }
  const Matrix id = Matrix::identity(t_core.rows());
  const Matrix right_resolvent = id + t_core * delta_t;
  if (determinant(right_resolvent).is_zero()) {
    throw SingularMatrixError("I + T^core dT is singular");
  }
  Matrix right = inverse(right_resolvent) * t_core;
  const Matrix left = t_core * inverse(id + delta_t * t_core);
  if (left != right) {
    throw InternalInconsistencyError("simplest_expression: the two forms of B differ");
  }
  return right;
}

RangeConditions range_conditions(const Matrix& t, const Matrix& t_core, const Matrix& delta_t) {
  require_conformal(t, t_core, delta_t);
  const Matrix t_bar = t + delta_t;
  RangeConditions out;
  out.range_subset = subspace_leq(t_bar, t);
  out.left = t * t_core * delta_t == delta_t;
  out.right = t_core * t * delta_t == delta_t;
  const Matrix resolvent = Matrix::identity(t.rows()) + t_core * delta_t;
  if (!determinant(resolvent).is_zero()) out.range_equal = same_range(t_bar, t);
  return out;
}

BoundReport norm_bounds(const Matrix& t_core, const Matrix& delta_t, const Matrix& b) {
  const Matrix tcore_dt = t_core * delta_t;
  const Matrix resolvent = inverse(Matrix::identity(t_core.rows()) + tcore_dt);
  const Matrix diff = b - t_core;

  BoundReport r;
  r.norm_t_core = spectral_norm(t_core);
  r.norm_tcore_dt = spectral_norm(tcore_dt);
  r.norm_resolvent = spectral_norm(resolvent);
  r.norm_b = spectral_norm(b);
  r.norm_b_minus_tcore = spectral_norm(diff);

  r.b_bound_ok = leq_rel(r.norm_b, r.norm_t_core * r.norm_resolvent);
  r.difference_bound_ok =
      leq_rel(r.norm_b_minus_tcore, r.norm_t_core * r.norm_resolvent * r.norm_tcore_dt);

  r.sandwich_certified = frobenius_norm_sq(tcore_dt) < 1;
  r.sandwich_applicable = r.norm_tcore_dt < 1.0;
  if (r.sandwich_applicable) {
    r.sandwich_lower_ok = leq_rel(r.norm_t_core / (1.0 + r.norm_tcore_dt), r.norm_b);
    r.sandwich_upper_ok = leq_rel(r.norm_b, r.norm_t_core / (1.0 - r.norm_tcore_dt));
  }

  r.frobenius_t_core = frobenius(t_core);
  r.frobenius_tcore_dt = frobenius(tcore_dt);
  r.frobenius_resolvent = frobenius(resolvent);
  r.frobenius_b = frobenius(b);
  r.frobenius_b_minus_tcore = frobenius(diff);
  r.frobenius_bounds_ok =
      leq_rel(r.frobenius_b, r.frobenius_t_core * r.frobenius_resolvent) &&
      leq_rel(r.frobenius_b_minus_tcore,
              r.frobenius_t_core * r.frobenius_resolvent * r.frobenius_tcore_dt);
  if (r.frobenius_tcore_dt < 1.0) {
    r.frobenius_bounds_ok = r.frobenius_bounds_ok &&
                            leq_rel(r.frobenius_t_core / (1.0 + r.frobenius_tcore_dt), r.frobenius_b) &&
                            leq_rel(r.frobenius_b, r.frobenius_t_core / (1.0 - r.frobenius_tcore_dt));
  }
  return r;
}

PerturbationVerdict analyze(const PerturbationCase& c) {
  require_conformal(c.t, c.t_core, c.delta_t);
  if (c.t_bar != c.t + c.delta_t) throw std::invalid_argument("case: t_bar != t + delta_t");

  const std::size_t n = c.t.rows();
  const Matrix id = Matrix::identity(n);
  const Matrix tcore_dt = c.t_core * c.delta_t;

  PerturbationVerdict v;
  v.characterization = c.characterization;

  // det(I + AB) = det(I + BA): both resolvents are invertible together.
  const Scalar det_right = determinant(id + tcore_dt);
  const Scalar det_left = determinant(id + c.delta_t * c.t_core);
  if (det_right != det_left) falsified("det(I + T^core dT) == det(I + dT T^core)");
  v.invertible = !det_right.is_zero();

  const RangeConditions cond = range_conditions(c.t, c.t_core, c.delta_t);
  v.condition_range_subset = cond.range_subset;
  v.condition_range_equal = cond.range_equal;
  v.condition_left = cond.left;
  v.condition_right = cond.right;

  // These three agree for every T with a {1,3,7}-inverse, singular or not.
  if (cond.left != cond.right) falsified("T T^core dT = dT <=> T^core T dT = dT");
  if (cond.range_subset != cond.left) falsified("R(T + dT) in R(T) <=> T T^core dT = dT");

  v.norm_t_core = spectral_norm(c.t_core);
  v.norm_tcore_dt = spectral_norm(tcore_dt);

  if (!v.invertible) return v;

  if (cond.range_equal != cond.left) falsified("R(T + dT) = R(T) <=> T T^core dT = dT");

  v.b = simplest_expression(c.t_core, c.delta_t);
  v.is_core_of_tbar = is_theta_inverse(ThetaSet::core_operator(), c.t_bar, *v.b);
  v.is_137_inverse_of_tbar = is_theta_inverse(ThetaSet::core_matrix(), c.t_bar, *v.b);
  v.tbar_b = c.t_bar * *v.b;

  if (v.is_core_of_tbar != cond.left) falsified("B is the core inverse of T + dT <=> conditions");
  if (v.is_137_inverse_of_tbar != cond.left) falsified("B is a {1,3,7}-inverse of T + dT <=> conditions");
  if (cond.left) {
    if (*v.tbar_b != c.t * c.t_core) falsified("(T + dT) B = T T^core");
    if (c.t_bar != c.t * (id + tcore_dt)) falsified("T + dT = T (I + T^core dT)");
  }

  v.bounds = norm_bounds(c.t_core, c.delta_t, *v.b);
  v.sandwich_applicable = v.bounds->sandwich_applicable;
  v.bounds_satisfied = v.bounds->satisfied();
  return v;
}

}  // namespace ginv
