#include "ginv/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ginv/error.hpp"
#include "ginv/fixtures.hpp"
#include "ginv/linalg.hpp"
#include "ginv/perturbation.hpp"
#include "ginv/theta.hpp"

namespace ginv::harness {

namespace {

constexpr std::array<std::pair<CampaignKind, std::string_view>, 5> kKindNames{{
    {CampaignKind::kInverse137Expression, "theorem_2_1"},
    {CampaignKind::kCoreExpression, "theorem_2_2"},
    {CampaignKind::kConditionEquivalence, "remark_2_1"},
    {CampaignKind::kCharacterizations, "characterizations"},
    {CampaignKind::kNormBounds, "corollary_bounds"},
}};

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

Scalar pow2_inverse(std::size_t k) { return Scalar(mpq_class(1, 1UL << k)); }

bool resolvent_invertible(const Matrix& t_core, const Matrix& delta_t) {
  return !determinant(Matrix::identity(t_core.rows()) + t_core * delta_t).is_zero();
}

// Halve `candidate` until I + T^core dT is invertible.
Matrix rescale_until_invertible(const Matrix& t_core, Matrix candidate, const GeneratorConfig& cfg) {
  const Scalar half = pow2_inverse(1);
  for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    if (resolvent_invertible(t_core, candidate)) return candidate;
    candidate *= half;
  }
  throw GenerationExhaustedError("no invertible rescaling of dT within max_retries halvings");
}

std::string inline_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ' ';
      out += m(i, j).to_string();
    }
  }
  return out + "]";
}

struct Shape {
  std::size_t dim;
  std::size_t rank;
};

Shape draw_shape(Rng& rng, const GeneratorConfig& cfg) {
  if (cfg.rank) return {cfg.dim, *cfg.rank};
  const std::size_t dim = uniform_index(rng, 1, cfg.dim);
  return {dim, uniform_index(rng, 0, dim)};
}

class Trial {
public:
  Trial(const GeneratorConfig& cfg, std::uint64_t seed, FuzzReport& report)
      : cfg_(cfg), seed_(seed), rng_(seed), report_(report) {}

  Rng& rng() { return rng_; }
  const GeneratorConfig& cfg() const { return cfg_; }

  void note(const std::string& counter) { ++report_.counters[counter]; }

  void fail(std::string invariant) {
    report_.violations.push_back({0, seed_, std::move(invariant), context_});
  }

  void check(bool ok, const char* invariant) {
    if (!ok) fail(invariant);
  }

  void set_context(const Matrix& t, const Matrix& other, const char* other_name) {
    context_ = "T=" + inline_matrix(t) + " " + other_name + "=" + inline_matrix(other);
  }

private:
  const GeneratorConfig& cfg_;
  std::uint64_t seed_;
  Rng rng_;
  FuzzReport& report_;
  std::string context_;
};

// Common tail for the expression campaigns: B, when it is a {1,3,7}-inverse of
// T + dT, must coincide with the independently constructed core inverse.
void check_uniqueness(Trial& trial, const Matrix& t_bar, const Matrix& b) {
  trial.note("uniqueness_checks");
  try {
    trial.check(core_inverse(t_bar) == b, "{1,3,7}-inverse of T + dT is not unique");
  } catch (const IndexError&) {
    trial.fail("T + dT has a {1,3,7}-inverse but index >= 2");
  }
}

void record_bounds(Trial& trial, const PerturbationVerdict& v) {
  if (!v.bounds) return;
  trial.note("bound_checks");
  if (v.sandwich_applicable) trial.note("sandwich_applicable");
  trial.check(v.bounds_satisfied, "norm bounds violated");
  trial.check(v.bounds->frobenius_bounds_ok, "Frobenius-norm bounds violated");
  trial.check(!v.bounds->sandwich_certified || v.bounds->sandwich_applicable,
              "exact Frobenius certificate below one but float spectral norm >= 1");
}

void core_expression_trial(Trial& trial) {
  auto& rng = trial.rng();
  const auto [dim, r] = draw_shape(rng, trial.cfg());
  const Matrix t = random_index_one_matrix(rng, dim, r, trial.cfg());
  const Matrix t_core = core_inverse(t);
  const bool violate = r < dim && coin(rng);
  const Matrix dt = violate ? random_range_violating_perturbation(rng, t, t_core, trial.cfg())
                            : random_range_preserving_perturbation(rng, t, t_core, trial.cfg());
  trial.set_context(t, dt, "dT");
  trial.note(violate ? "range_violating" : "range_preserving");

  const auto c = PerturbationCase::with_inverse(t, dt, t_core);
  const PerturbationVerdict v = analyze(c);
  trial.check(v.invertible, "generator produced a singular resolvent");
  if (!v.invertible) return;
  trial.note("two_form_identity");

  if (!violate) {
    trial.check(v.is_core_of_tbar, "range-preserving dT: B is not the core inverse of T + dT");
    trial.check(*v.tbar_b == t * t_core, "range-preserving dT: (T + dT) B != T T^core");
    trial.check(v.condition_range_equal.value_or(false), "range-preserving dT: R(T + dT) != R(T)");
    check_uniqueness(trial, c.t_bar, *v.b);
  } else {
    trial.check(!v.is_core_of_tbar, "range-violating dT: B is a core inverse of T + dT");
    if (index(c.t_bar).index <= 1) {
      trial.note("violating_tbar_has_core");
      trial.check(core_inverse(c.t_bar) != *v.b, "range-violating dT: B equals core(T + dT)");
    }
  }
  record_bounds(trial, v);
}

void inverse_137_trial(Trial& trial) {
  auto& rng = trial.rng();
  const auto [dim, r] = draw_shape(rng, trial.cfg());
  const Matrix t = random_index_one_matrix(rng, dim, r, trial.cfg());
  const Matrix t_core = core_inverse(t);
  trial.check(is_theta_inverse(ThetaSet::core_matrix(), t, t_core), "core inverse fails (1),(3),(7)");

  Matrix dt;
  switch (uniform_index(rng, 0, 2)) {
    case 0:
      trial.note("range_preserving");
      dt = random_range_preserving_perturbation(rng, t, t_core, trial.cfg());
      break;
    case 1:
      if (r < dim) {
        trial.note("range_violating");
        dt = random_range_violating_perturbation(rng, t, t_core, trial.cfg());
        break;
      }
      [[fallthrough]];
    default:
      trial.note("arbitrary");
      dt = random_matrix(rng, dim, dim, trial.cfg()) * pow2_inverse(uniform_index(rng, 0, 4));
      break;
  }
  trial.set_context(t, dt, "dT");

  const auto c = PerturbationCase::with_inverse(t, dt, t_core);
  const PerturbationVerdict v = analyze(c);
  if (!v.invertible) {
    trial.note("singular");
    return;
  }
  trial.note("invertible");
  trial.note(v.conditions_hold() ? "conditions_true" : "conditions_false");
  trial.check(v.is_137_inverse_of_tbar == v.condition_left,
              "{1,3,7}-inverse verdict disagrees with T T^core dT = dT");
  trial.check(v.is_137_inverse_of_tbar == v.condition_range_subset,
              "{1,3,7}-inverse verdict disagrees with R(T + dT) in R(T)");
  if (v.is_137_inverse_of_tbar) {
    trial.check(*v.tbar_b == t * t_core, "(T + dT) B != T T^core");
    check_uniqueness(trial, c.t_bar, *v.b);
  }
  record_bounds(trial, v);
}

void condition_equivalence_trial(Trial& trial) {
  auto& rng = trial.rng();
  const auto& cfg = trial.cfg();
  const auto [dim, r] = draw_shape(rng, cfg);
  const Matrix t = random_index_one_matrix(rng, dim, r, cfg);
  const Matrix t_core = core_inverse(t);
  const Matrix q = Matrix::identity(dim) - t * t_core;

  Matrix dt;
  switch (uniform_index(rng, 0, 4)) {
    case 0:
      dt = random_range_preserving_perturbation(rng, t, t_core, cfg);
      break;
    case 1:
      dt = r < dim ? random_range_violating_perturbation(rng, t, t_core, cfg)
                   : random_matrix(rng, dim, dim, cfg);
      break;
    case 2:
      dt = random_matrix(rng, dim, dim, cfg);
      break;
    case 3:
      // I + T^core(-T) = I - T^core T, singular whenever rank(T) > 0.
      dt = -t;
      break;
    default:
      // T^core (I - T T^core) = 0, so the resolvent stays I - T^core T.
      dt = -t + q * random_matrix(rng, dim, dim, cfg);
      break;
  }
  trial.set_context(t, dt, "dT");

  const RangeConditions cond = range_conditions(t, t_core, dt);
  trial.note(resolvent_invertible(t_core, dt) ? "invertible" : "singular");
  trial.note(cond.left ? "left_true" : "left_false");
  trial.check(cond.left == cond.right, "T T^core dT = dT disagrees with T^core T dT = dT");
  (void)analyze(PerturbationCase::with_inverse(t, dt, t_core));
}

void characterization_trial(Trial& trial) {
  auto& rng = trial.rng();
  const auto& cfg = trial.cfg();
  const auto [dim, r] = draw_shape(rng, cfg);
  const Matrix t = random_index_one_matrix(rng, dim, r, cfg);
  const Matrix core = core_inverse(t);
  const Matrix mp = moore_penrose(t);
  const Matrix grp = group_inverse(t);
  const Matrix id = Matrix::identity(dim);

  Matrix corrupted = core;
  corrupted(uniform_index(rng, 0, dim - 1), uniform_index(rng, 0, dim - 1)) +=
      Scalar::rational(static_cast<std::int64_t>(uniform_index(rng, 1, 5)), 1);

  const std::array<std::pair<const char*, Matrix>, 9> candidates{{
      {"core", core},
      {"moore_penrose", mp},
      {"group", grp},
      {"group*T*moore_penrose", grp * t * mp},
      {"T", t},
      {"identity", id},
      {"zero", Matrix::zero(dim, dim)},
      {"random", random_matrix(rng, dim, dim, cfg)},
      {"corrupted_core", corrupted},
  }};

  trial.set_context(t, core, "core");
  trial.check(grp * t * mp == core, "core != group * T * moore_penrose");
  trial.check(moore_penrose(mp) == t, "moore_penrose is not an involution");
  trial.note("bridge_checks");

  for (const auto& [name, s] : candidates) {
    const bool d11 = is_core_inverse_def11(t, s);
    const bool d12 = is_core_inverse_def12(t, s);
    const bool t137 = is_theta_inverse(ThetaSet::core_matrix(), t, s);
    const bool t12367 = is_theta_inverse(ThetaSet::core_operator(), t, s);
    trial.note("candidates");
    if (!(d11 == d12 && d12 == t137 && t137 == t12367)) {
      trial.set_context(t, s, name);
      trial.fail(std::string("core-inverse characterizations disagree on candidate ") + name);
    }
    if (t137) {
      trial.note("accepted_candidates");
      if (s != core) {
        trial.set_context(t, s, name);
        trial.fail(std::string("two distinct {1,3,7}-inverses; candidate ") + name);
      }
    }
  }

  // Operator-style definition against {1,2,3,6,7} for T of any index.
  const std::size_t r2 = uniform_index(rng, 0, dim);
  const Matrix t2 = random_matrix(rng, dim, r2, cfg) * random_matrix(rng, r2, dim, cfg);
  const bool has_core = index(t2).index <= 1;
  trial.note(has_core ? "any_index_le_1" : "any_index_ge_2");
  const Matrix s2 = has_core && coin(rng) ? core_inverse(t2) : random_matrix(rng, dim, dim, cfg);
  trial.set_context(t2, s2, "S");
  trial.check(is_core_inverse_def12(t2, s2) == is_theta_inverse(ThetaSet::core_operator(), t2, s2),
              "operator-style definition disagrees with {1,2,3,6,7}");
}

void norm_bounds_trial(Trial& trial) {
  auto& rng = trial.rng();
  const auto [dim, r] = draw_shape(rng, trial.cfg());
  const Matrix t = random_index_one_matrix(rng, dim, r, trial.cfg());
  const Matrix t_core = core_inverse(t);
  const Matrix dt = random_range_preserving_perturbation(rng, t, t_core, trial.cfg());
  trial.set_context(t, dt, "dT");
  const PerturbationVerdict v = analyze(PerturbationCase::with_inverse(t, dt, t_core));
  trial.check(v.invertible && v.is_core_of_tbar, "range-preserving dT did not give a core inverse");
  record_bounds(trial, v);
}

}  // namespace

void GeneratorConfig::validate() const {
  if (dim == 0) throw std::invalid_argument("dim must be positive");
  if (rank && *rank > dim) throw std::invalid_argument("rank must not exceed dim");
  if (entry_bound <= 0) throw std::invalid_argument("entry_bound must be positive");
  if (max_retries == 0) throw std::invalid_argument("max_retries must be positive");
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial) {
  // splitmix64 finalizer over (seed, trial).
  std::uint64_t z = campaign_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Scalar random_scalar(Rng& rng, const GeneratorConfig& cfg) {
  std::uniform_int_distribution<long> num(-cfg.entry_bound, cfg.entry_bound);
  std::uniform_int_distribution<long> den(1, cfg.entry_bound);
  mpq_class re(num(rng), static_cast<unsigned long>(den(rng)));
  mpq_class im = 0;
  if (cfg.complex_entries) im = mpq_class(num(rng), static_cast<unsigned long>(den(rng)));
  return {std::move(re), std::move(im)};
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const GeneratorConfig& cfg) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, cfg);
  }
  return m;
}

Matrix random_index_one_matrix(Rng& rng, std::size_t dim, std::size_t rank, const GeneratorConfig& cfg) {
  if (dim == 0 || rank > dim) throw std::invalid_argument("need 0 <= rank <= dim, dim > 0");
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const Matrix f = random_matrix(rng, dim, rank, cfg);
    const Matrix g = random_matrix(rng, rank, dim, cfg);
    if (ginv::rank(f) != rank || ginv::rank(g) != rank) continue;
    if (determinant(g * f).is_zero()) continue;
    Matrix t = f * g;
    if (index(t).index > 1 || ginv::rank(t) != rank) {
      throw InternalInconsistencyError("index-one generator produced a matrix failing its check");
    }
    return t;
  }
  throw GenerationExhaustedError(
      "no index-one matrix after max_retries draws; a random F G has singular G F with "
      "probability well below 1/2 for entry_bound >= 2, so raise entry_bound or max_retries");
}

Matrix random_index_one_matrix(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return random_index_one_matrix(rng, cfg.dim, cfg.rank.value_or(cfg.dim), cfg);
}

Matrix random_range_preserving_perturbation(Rng& rng, const Matrix& t, const Matrix& t_core,
                                            const GeneratorConfig& cfg) {
  const std::size_t n = t.rows();
  const Matrix projector = t * t_core;
  Matrix dt = projector * random_matrix(rng, n, n, cfg) * pow2_inverse(uniform_index(rng, 0, 6));
  dt = rescale_until_invertible(t_core, std::move(dt), cfg);
  if (projector * dt != dt) {
    throw InternalInconsistencyError("range-preserving generator broke T T^core dT = dT");
  }
  return dt;
}

Matrix random_range_preserving_perturbation(const Matrix& t, const Matrix& t_core,
                                            const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_range_preserving_perturbation(rng, t, t_core, cfg);
}

Matrix random_range_violating_perturbation(Rng& rng, const Matrix& t, const Matrix& t_core,
                                           const GeneratorConfig& cfg) {
  const std::size_t n = t.rows();
  if (rank(t) == n) {
    throw ImpossibleRequestError("full-rank T: every perturbation keeps R(T + dT) inside R(T)");
  }
  const Matrix projector = t * t_core;
  const Matrix complement = Matrix::identity(n) - projector;
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const Matrix outside = complement * random_matrix(rng, n, n, cfg);
    if (outside.is_zero()) continue;
    Matrix dt = (projector * random_matrix(rng, n, n, cfg) + outside) *
                pow2_inverse(uniform_index(rng, 0, 6));
    dt = rescale_until_invertible(t_core, std::move(dt), cfg);
    if (projector * dt == dt) {
      throw InternalInconsistencyError("range-violating generator produced T T^core dT = dT");
    }
    return dt;
  }
  throw GenerationExhaustedError("no range-violating component after max_retries draws");
}

Matrix random_range_violating_perturbation(const Matrix& t, const Matrix& t_core,
                                           const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_range_violating_perturbation(rng, t, t_core, cfg);
}

std::string_view to_string(CampaignKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CampaignKind> parse_campaign_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

FuzzReport run_trial(CampaignKind kind, const GeneratorConfig& cfg, std::uint64_t sub_seed) {
  cfg.validate();
  FuzzReport report;
  report.kind = kind;
  report.trials = 1;
  report.seed = sub_seed;
  Trial trial(cfg, sub_seed, report);
  try {
    switch (kind) {
      case CampaignKind::kInverse137Expression:
        inverse_137_trial(trial);
        break;
      case CampaignKind::kCoreExpression:
        core_expression_trial(trial);
        break;
      case CampaignKind::kConditionEquivalence:
        condition_equivalence_trial(trial);
        break;
      case CampaignKind::kCharacterizations:
        characterization_trial(trial);
        break;
      case CampaignKind::kNormBounds:
        norm_bounds_trial(trial);
        break;
    }
  } catch (const std::exception& e) {
    trial.fail(std::string("exception: ") + e.what());
  }
  return report;
}

FuzzReport fuzz_campaign(CampaignKind kind, std::size_t trials, const GeneratorConfig& cfg,
                         unsigned threads) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<FuzzReport> per_trial(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      per_trial[i] = run_trial(kind, cfg, trial_seed(cfg.seed, i));
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(threads, 1U); ++w) pool.emplace_back(worker);
    worker();
  }

  FuzzReport report;
  report.kind = kind;
  report.trials = trials;
  report.seed = cfg.seed;
  for (std::size_t i = 0; i < trials; ++i) {
    for (auto& v : per_trial[i].violations) {
      v.trial = i;
      report.violations.push_back(std::move(v));
    }
    for (const auto& [name, count] : per_trial[i].counters) report.counters[name] += count;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

NullSpaceWitnessReport null_space_witness_demo(std::size_t search_trials, std::uint64_t seed) {
  const auto fx = fixtures::range_violating();
  NullSpaceWitnessReport out;
  out.fixture_null_space_equal = same_range(null_space_basis(fx.t_bar), null_space_basis(fx.t));
  out.fixture_rank = rank(fx.t);
  out.fixture_rank_equal = rank(fx.t_bar) == out.fixture_rank;
  const auto verdict = analyze(PerturbationCase::with_inverse(fx.t, fx.delta_t, fx.t_core));
  out.fixture_invertible = verdict.invertible;
  out.fixture_is_core_of_tbar = verdict.is_core_of_tbar;
  out.fixture_core_differs = verdict.b && core_inverse(fx.t_bar) != *verdict.b;
  if (!out.fixture_null_space_equal || !out.fixture_rank_equal || !out.fixture_invertible ||
      out.fixture_is_core_of_tbar || !out.fixture_core_differs) {
    throw TheoremFalsificationError("reference witness lacks a stated property");
  }

  GeneratorConfig cfg;
  cfg.dim = 4;
  cfg.rank = 3;
  cfg.entry_bound = 3;
  out.search_trials = search_trials;
  for (std::size_t i = 0; i < search_trials; ++i) {
    const std::uint64_t sub = trial_seed(seed, i);
    Rng rng(sub);
    const Matrix t = random_index_one_matrix(rng, cfg.dim, *cfg.rank, cfg);
    const Matrix t_core = core_inverse(t);
    // dT = M T keeps N(T) inside N(T + dT); equality and rank are checked below.
    const Matrix dt = random_matrix(rng, cfg.dim, cfg.dim, cfg) * t;
    const Matrix t_bar = t + dt;
    if (!same_range(null_space_basis(t_bar), null_space_basis(t))) continue;
    if (rank(t_bar) != rank(t)) continue;
    if (!resolvent_invertible(t_core, dt)) continue;
    const auto v = analyze(PerturbationCase::with_inverse(t, dt, t_core));
    if (!v.is_core_of_tbar) out.witnesses.push_back({sub, t, dt});
  }
  return out;
}

}  // namespace ginv::harness
