#include <doctest.h>

#include "ginv/error.hpp"
#include "ginv/fixtures.hpp"
#include "ginv/harness.hpp"
#include "ginv/linalg.hpp"
#include "ginv/norms.hpp"
#include "ginv/perturbation.hpp"
#include "ginv/theta.hpp"

using namespace ginv;

TEST_CASE("simplest expression on reference data") {
  const auto pres = fixtures::range_preserving();
  CHECK(simplest_expression(pres.t_core, pres.delta_t) ==
        fixtures::scaled({{30, 0, 10, 10}, {-201, 18, -88, 11}, {-75, 0, -40, 5}, {-222, 36, -86, 22}}, 90));
  const auto viol = fixtures::range_violating();
  CHECK(simplest_expression(viol.t_core, viol.delta_t) ==
        fixtures::scaled({{6, 4, -4, 22}, {-1, 2, 2, -1}, {3, 6, -2, 19}, {-2, -4, 4, -18}}, 8));
  CHECK(simplest_expression(pres.t_core, Matrix::zero(4, 4)) == pres.t_core);
}

TEST_CASE("simplest expression errors") {
  const Matrix t_core = Matrix::identity(2);
  CHECK_THROWS_AS(simplest_expression(t_core, -Matrix::identity(2)), SingularMatrixError);
  CHECK_THROWS_AS(simplest_expression(t_core, Matrix::identity(3)), DimensionError);
}

TEST_CASE("range conditions on reference data") {
  const auto pres = fixtures::range_preserving();
  const auto a = range_conditions(pres.t, pres.t_core, pres.delta_t);
  CHECK(a.range_subset);
  CHECK(a.range_equal == true);
  CHECK(a.left);
  CHECK(a.right);

  const auto viol = fixtures::range_violating();
  const auto b = range_conditions(viol.t, viol.t_core, viol.delta_t);
  CHECK_FALSE(b.range_subset);
  CHECK(b.range_equal == false);
  CHECK_FALSE(b.left);
  CHECK_FALSE(b.right);

  const auto z = range_conditions(pres.t, pres.t_core, Matrix::zero(4, 4));
  CHECK(z.range_subset);
  CHECK(z.range_equal == true);
  CHECK(z.left);
  CHECK(z.right);

  // Singular resolvent: range equality is not evaluated.
  const auto s = range_conditions(pres.t, pres.t_core, -pres.t);
  CHECK_FALSE(s.range_equal.has_value());
  CHECK(s.left);
  CHECK(s.right);
  CHECK_THROWS_AS(range_conditions(pres.t, pres.t_core, Matrix::identity(3)), DimensionError);
}

TEST_CASE("analyze reference data") {
  const auto pres = fixtures::range_preserving();
  const auto v = analyze(PerturbationCase::make(pres.t, pres.delta_t));
  CHECK(v.invertible);
  CHECK(v.characterization == Characterization::kCoreOperator);
  CHECK(v.is_core_of_tbar);
  CHECK(v.is_137_inverse_of_tbar);
  CHECK(*v.tbar_b == pres.t * pres.t_core);
  CHECK(*v.b == pres.expression);
  CHECK(v.condition_range_subset);
  CHECK(v.condition_range_equal == true);
  CHECK(v.condition_left);
  CHECK(v.condition_right);
  CHECK(v.bounds_satisfied);

  const auto viol = fixtures::range_violating();
  const auto w = analyze(PerturbationCase::make(viol.t, viol.delta_t));
  CHECK(w.invertible);
  CHECK_FALSE(w.condition_range_subset);
  CHECK(w.condition_range_equal == false);
  CHECK_FALSE(w.condition_left);
  CHECK_FALSE(w.condition_right);
  CHECK_FALSE(w.is_core_of_tbar);
  CHECK(*w.b == viol.expression);
  CHECK(*w.b != core_inverse(viol.t_bar));

  const auto z = analyze(PerturbationCase::make(pres.t, Matrix::zero(4, 4)));
  CHECK(*z.b == pres.t_core);
  CHECK(z.is_core_of_tbar);
}

TEST_CASE("analyze with a singular resolvent keeps exact fields") {
  const auto fx = fixtures::range_preserving();
  const auto v = analyze(PerturbationCase::make(fx.t, -fx.t));
  CHECK_FALSE(v.invertible);
  CHECK_FALSE(v.b.has_value());
  CHECK_FALSE(v.tbar_b.has_value());
  CHECK_FALSE(v.bounds.has_value());
  CHECK_FALSE(v.is_core_of_tbar);
  CHECK(v.condition_left);
  CHECK(v.condition_right);
  CHECK(v.condition_range_subset);
  CHECK(v.norm_t_core > 0.0);
}

TEST_CASE("case construction validates its inputs") {
  const auto fx = fixtures::range_preserving();
  CHECK_THROWS_AS(PerturbationCase::make(Matrix{{0, 1}, {0, 0}}, Matrix::zero(2, 2)), IndexError);
  CHECK_THROWS_AS(PerturbationCase::with_inverse(fx.t, fx.delta_t, moore_penrose(fx.t)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PerturbationCase::make(fx.t, Matrix::zero(3, 3)), DimensionError);
  auto c = PerturbationCase::make(fx.t, fx.delta_t);
  c.t_bar = fx.t;
  CHECK_THROWS_AS(analyze(c), std::invalid_argument);
}

TEST_CASE("norm bounds") {
  const auto fx = fixtures::range_preserving();
  const auto zero = norm_bounds(fx.t_core, Matrix::zero(4, 4), fx.t_core);
  CHECK(zero.satisfied());
  CHECK(zero.sandwich_applicable);
  CHECK(zero.sandwich_certified);
  CHECK(zero.norm_b == doctest::Approx(zero.norm_t_core).epsilon(1e-12));
  CHECK(zero.norm_b_minus_tcore == 0.0);
  CHECK(zero.frobenius_bounds_ok);

  const auto r = norm_bounds(fx.t_core, fx.delta_t, fx.expression);
  CHECK(r.b_bound_ok);
  CHECK(r.difference_bound_ok);
  CHECK(r.satisfied());
  // The reference perturbation is large: the sandwich does not apply.
  CHECK(r.norm_tcore_dt > 1.0);
  CHECK_FALSE(r.sandwich_applicable);
  CHECK_FALSE(r.sandwich_certified);
  CHECK(r.norm_t_core == doctest::Approx(spectral_norm(fx.t_core)));
}

TEST_CASE("sandwich bound holds for small range-preserving perturbations") {
  const auto fx = fixtures::range_preserving();
  const Matrix dt = fx.delta_t * Scalar::rational(1, 64);
  const Matrix b = simplest_expression(fx.t_core, dt);
  const auto r = norm_bounds(fx.t_core, dt, b);
  CHECK(r.sandwich_applicable);
  CHECK(r.sandwich_lower_ok);
  CHECK(r.sandwich_upper_ok);
  CHECK(r.satisfied());
  CHECK(r.norm_t_core / (1 + r.norm_tcore_dt) <= r.norm_b);
  CHECK(r.norm_b <= r.norm_t_core / (1 - r.norm_tcore_dt));
}

TEST_CASE("two-form identity and determinant identity on random instances") {
  harness::Rng rng(101);
  harness::GeneratorConfig cfg;
  cfg.complex_entries = true;
  int invertible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix t_core = harness::random_matrix(rng, n, n, cfg);
    const Matrix dt = harness::random_matrix(rng, n, n, cfg);
    const Matrix id = Matrix::identity(n);
    const Scalar d1 = determinant(id + t_core * dt);
    CHECK(d1 == determinant(id + dt * t_core));
    if (d1.is_zero()) continue;
    ++invertible;
    CHECK(t_core * inverse(id + dt * t_core) == inverse(id + t_core * dt) * t_core);
    CHECK_NOTHROW(simplest_expression(t_core, dt));
  }
  CHECK(invertible > 150);
}

TEST_CASE("forward direction and factorization step on random range-preserving cases") {
  harness::Rng rng(103);
  harness::GeneratorConfig cfg;
  cfg.complex_entries = true;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t r = trial % (n + 1);
    const Matrix t = harness::random_index_one_matrix(rng, n, r, cfg);
    const Matrix t_core = core_inverse(t);
    const Matrix dt = harness::random_range_preserving_perturbation(rng, t, t_core, cfg);
    const auto c = PerturbationCase::with_inverse(t, dt, t_core);
    const auto v = analyze(c);
    REQUIRE(v.invertible);
    CHECK(v.is_core_of_tbar);
    CHECK(*v.tbar_b == t * t_core);
    CHECK(c.t_bar == t * (Matrix::identity(n) + t_core * dt));
    CHECK(same_range(c.t_bar, t));
    CHECK(v.bounds_satisfied);
  }
}
