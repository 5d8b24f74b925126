#include <doctest.h>

#include <stdexcept>

#include "ginv/error.hpp"
#include "ginv/fixtures.hpp"
#include "ginv/harness.hpp"
#include "ginv/linalg.hpp"
#include "ginv/theta.hpp"
#include "oracles.hpp"

using namespace ginv;

namespace {

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::rational(n, d); }

const Matrix kShift{{0, 1}, {0, 0}};

// Independent oracle: the seven equations spelled out.
bool equation_oracle(int id, const Matrix& t, const Matrix& s) {
  switch (id) {
    case 1: return t * s * t == t;
    case 2: return s * t * s == s;
    case 3: return (t * s).adjoint() == t * s;
    case 4: return (s * t).adjoint() == s * t;
    case 5: return t * s == s * t;
    case 6: return s * (t * t) == t;
    case 7: return t * (s * s) == s;
    default: throw std::logic_error("bad id");
  }
}

}  // namespace

TEST_CASE("theta set parsing and aliases") {
  CHECK(ThetaSet::parse("core_matrix") == ThetaSet{1, 3, 7});
  CHECK(ThetaSet::parse("{1,2,3,6,7}") == ThetaSet::core_operator());
  CHECK(ThetaSet::parse("1, 2, 5") == ThetaSet::group());
  CHECK(ThetaSet::parse("moore_penrose").to_string() == "{1,2,3,4}");
  CHECK(ThetaSet::inner().to_string() == "{1}");
  CHECK(ThetaSet::generalized() == ThetaSet{2, 1});
  CHECK_THROWS_AS(ThetaSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSet::parse("8"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSet::parse("1,,3"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSet::parse("drazin"), std::invalid_argument);
  CHECK_THROWS_AS((ThetaSet{0}), std::invalid_argument);
}

TEST_CASE("equation checks") {
  const auto fx = fixtures::range_preserving();
  CHECK(check_equation(PenroseEquation::kInner, fx.t, fx.t_core));
  for (int id = 1; id <= 7; ++id) {
    CHECK(check_equation(static_cast<PenroseEquation>(id), Matrix::identity(3), Matrix::identity(3)));
  }
  CHECK(moore_penrose(kShift) == Matrix{{0, 0}, {1, 0}});
  CHECK_FALSE(check_equation(PenroseEquation::kCommuting, kShift, moore_penrose(kShift)));
  CHECK_THROWS_AS(check_equation(PenroseEquation::kInner, Matrix(2, 3), Matrix(3, 2)), DimensionError);
  CHECK_THROWS_AS(check_equation(PenroseEquation::kInner, Matrix::identity(2), Matrix::identity(3)),
                  DimensionError);
}

TEST_CASE("equation checks agree with the spelled-out oracle") {
  harness::Rng rng(3);
  harness::GeneratorConfig cfg;
  cfg.complex_entries = true;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix t = harness::random_matrix(rng, n, n, cfg);
    // Mix genuine inverses in so both outcomes occur.
    const Matrix s = trial % 3 == 0 ? moore_penrose(t) : harness::random_matrix(rng, n, n, cfg);
    for (int id = 1; id <= 7; ++id) {
      CHECK(check_equation(static_cast<PenroseEquation>(id), t, s) == equation_oracle(id, t, s));
    }
  }
}

TEST_CASE("theta-inverse membership") {
  const auto pres = fixtures::range_preserving();
  CHECK(is_theta_inverse(ThetaSet::core_operator(), pres.t, pres.t_core));
  const auto viol = fixtures::range_violating();
  CHECK_FALSE(is_theta_inverse(ThetaSet::core_matrix(), viol.t_bar, viol.expression));
  for (auto theta : {ThetaSet::inner(), ThetaSet::moore_penrose(), ThetaSet::group(),
                     ThetaSet::core_operator(), ThetaSet{4}, ThetaSet{1, 2, 3, 4, 5, 6, 7}}) {
    CHECK(is_theta_inverse(theta, Matrix::identity(4), Matrix::identity(4)));
  }
}

TEST_CASE("index") {
  CHECK(index(Matrix::identity(3)).index == 0);
  CHECK(index(fixtures::range_preserving().t).index <= 1);
  const IndexReport shift = index(kShift);
  CHECK(shift.index == 2);
  CHECK(shift.rank_sequence == std::vector<std::size_t>{2, 1, 0, 0});
  CHECK(index(Matrix::zero(3, 3)).index == 1);
  CHECK_THROWS_AS(index(Matrix(2, 3)), DimensionError);
}

TEST_CASE("index agrees with a minor-rank oracle and never exceeds n") {
  harness::Rng rng(7);
  harness::GeneratorConfig cfg;
  cfg.entry_bound = 2;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix t = harness::random_matrix(rng, n, n, cfg);
    // Strictly upper triangular part: nilpotent, so high index is common.
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) t(i, j) = Scalar(0);
      }
    }
    std::vector<std::size_t> seq{n};
    Matrix p = t;
    std::size_t k = 0;
    for (;; ++k) {
      seq.push_back(oracle::minor_rank(p));
      if (seq[k] == seq[k + 1]) break;
      p = p * t;
    }
    const IndexReport r = index(t);
    CHECK(r.index == k);
    CHECK(r.rank_sequence == seq);
    CHECK(r.index <= n);
  }
}

TEST_CASE("Moore-Penrose inverse") {
  CHECK(moore_penrose(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(moore_penrose(Matrix{{1, 1}, {0, 0}}) == Matrix{{1, 0}, {1, 0}} * q(1, 2));
  CHECK(moore_penrose(Matrix::zero(3, 3)) == Matrix::zero(3, 3));
  CHECK_THROWS_AS(moore_penrose(Matrix(2, 3)), DimensionError);
}

TEST_CASE("group inverse") {
  CHECK(group_inverse(Matrix::identity(2)) == Matrix::identity(2));
  CHECK_THROWS_AS(group_inverse(kShift), IndexError);
  CHECK(group_inverse(Matrix{{2, 0}, {0, 0}}) == Matrix{{1, 0}, {0, 0}} * q(1, 2));
  CHECK(group_inverse(Matrix::zero(2, 2)) == Matrix::zero(2, 2));
}

TEST_CASE("core inverse") {
  const auto pres = fixtures::range_preserving();
  CHECK(core_inverse(pres.t) ==
        fixtures::scaled({{-30, 60, 40, 10}, {21, -18, 8, -31}, {-15, 30, 40, -35}, {42, -36, -24, 18}}, 120));
  const auto viol = fixtures::range_violating();
  CHECK(core_inverse(viol.t_bar) == fixtures::scaled({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}, 2));
  const Matrix a{{2, 1}, {1, 1}};
  CHECK(core_inverse(a) == inverse(a));
  CHECK(core_inverse(Matrix::zero(3, 3)) == Matrix::zero(3, 3));
  CHECK_THROWS_AS(core_inverse(kShift), IndexError);
}

TEST_CASE("orthogonal projector") {
  CHECK(orthogonal_projector(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(orthogonal_projector(Matrix{{1, 1}, {0, 0}}) == Matrix{{1, 0}, {0, 0}});
  const auto fx = fixtures::range_preserving();
  const Matrix p = orthogonal_projector(fx.t);
  CHECK(fx.t * fx.t_core == p);
  CHECK(p * p == p);
  CHECK(p.adjoint() == p);
  CHECK(same_range(p, fx.t));
}

TEST_CASE("core-inverse definitions on named examples") {
  const auto fx = fixtures::range_preserving();
  CHECK(is_core_inverse_def11(fx.t, fx.t_core));
  CHECK(is_core_inverse_def11(Matrix::identity(3), Matrix::identity(3)));
  const Matrix t{{1, 1}, {0, 0}};
  const Matrix mp = moore_penrose(t);
  CHECK(mp == Matrix{{1, 0}, {1, 0}} * q(1, 2));
  CHECK_FALSE(subspace_leq(mp, t));
  CHECK_FALSE(is_core_inverse_def11(t, mp));
  CHECK_THROWS_AS(is_core_inverse_def11(kShift, Matrix::zero(2, 2)), IndexError);

  CHECK(is_core_inverse_def12(fx.t, fx.t_core));
  CHECK(is_core_inverse_def12(Matrix::zero(3, 3), Matrix::zero(3, 3)));
  CHECK_THROWS_AS(is_core_inverse_def12(Matrix::identity(2), Matrix::identity(3)), DimensionError);
}

TEST_CASE("operator-style definition matches {1,2,3,6,7} on random pairs of any index") {
  harness::Rng rng(13);
  harness::GeneratorConfig cfg;
  cfg.entry_bound = 3;
  int agreements_true = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t r = (trial / 4) % (n + 1);
    const Matrix t = harness::random_matrix(rng, n, r, cfg) * harness::random_matrix(rng, r, n, cfg);
    Matrix s = harness::random_matrix(rng, n, n, cfg);
    if (trial % 2 == 0 && index(t).index <= 1) s = core_inverse(t);
    const bool expected = is_theta_inverse(ThetaSet::core_operator(), t, s);
    agreements_true += expected ? 1 : 0;
    CHECK(is_core_inverse_def12(t, s) == expected);
  }
  CHECK(agreements_true > 100);
}

TEST_CASE("special cases and identities") {
  harness::Rng rng(19);
  harness::GeneratorConfig cfg;
  cfg.complex_entries = true;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t r = trial % (n + 1);
    const Matrix t = harness::random_index_one_matrix(rng, n, r, cfg);

    const Matrix p = orthogonal_projector(t);
    CHECK(core_inverse(p) == p);

    CHECK(moore_penrose(moore_penrose(t)) == t);
    CHECK(core_inverse(t) == group_inverse(t) * t * moore_penrose(t));

    const Matrix a = harness::random_index_one_matrix(rng, n, n, cfg);
    const Matrix inv = inverse(a);
    CHECK(moore_penrose(a) == inv);
    CHECK(group_inverse(a) == inv);
    CHECK(core_inverse(a) == inv);
  }
}
