#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv::harness {

using Rng = std::mt19937_64;

struct GeneratorConfig {
  /// Matrix size. Campaigns draw the size per trial from [1, dim] unless
  /// `rank` is fixed, in which case every trial uses exactly dim x dim.
  std::size_t dim = 4;
  /// Target rank in [0, dim]; drawn per trial when absent.
  std::optional<std::size_t> rank;
  /// Numerators from [-bound, bound], denominators from [1, bound].
  std::int64_t entry_bound = 5;
  std::uint64_t seed = 0;
  std::size_t max_retries = 64;
  /// Draw Gaussian-rational entries instead of real ones.
  bool complex_entries = false;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

/// Sub-seed for one trial of a campaign; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial);

Scalar random_scalar(Rng& rng, const GeneratorConfig& cfg);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const GeneratorConfig& cfg);

/// T = F G with F (dim x rank), G (rank x dim) random and G F invertible, so
/// index(T) <= 1 and rank(T) = rank; both are re-checked before returning.
Matrix random_index_one_matrix(Rng& rng, std::size_t dim, std::size_t rank, const GeneratorConfig& cfg);
/// Seeds from cfg.seed; cfg.rank defaults to dim.
Matrix random_index_one_matrix(const GeneratorConfig& cfg);

/// dT = (T T^core) M, halved until I + T^core dT is invertible. The starting
/// scale is 2^-k with k drawn from [0, 6], so a share of the draws have
/// ||T^core dT|| < 1.
Matrix random_range_preserving_perturbation(Rng& rng, const Matrix& t, const Matrix& t_core,
                                            const GeneratorConfig& cfg);
Matrix random_range_preserving_perturbation(const Matrix& t, const Matrix& t_core,
                                            const GeneratorConfig& cfg);

/// dT = (T T^core) M1 + (I - T T^core) M2 with the second term nonzero, halved
/// until I + T^core dT is invertible. Throws ImpossibleRequestError for full
/// rank T.
Matrix random_range_violating_perturbation(Rng& rng, const Matrix& t, const Matrix& t_core,
                                           const GeneratorConfig& cfg);
Matrix random_range_violating_perturbation(const Matrix& t, const Matrix& t_core,
                                           const GeneratorConfig& cfg);

enum class CampaignKind {
  /// B is a {1,3,7}-inverse of T + dT iff the range conditions hold.
  kInverse137Expression,
  /// B is the core inverse of T + dT iff the range conditions hold.
  kCoreExpression,
  /// T T^core dT = dT iff T^core T dT = dT, singular resolvent included.
  kConditionEquivalence,
  /// The four core-inverse characterizations agree; uniqueness; the
  /// group * T * MP identity.
  kCharacterizations,
  /// Norm inequalities for range-preserving perturbations.
  kNormBounds,
};

/// External names: theorem_2_1, theorem_2_2, remark_2_1, characterizations,
/// corollary_bounds.
std::string_view to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign_kind(std::string_view name);

struct Violation {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string invariant;
  /// T and dT (or candidate) as text, enough to replay by hand.
  std::string detail;
};

struct FuzzReport {
  CampaignKind kind = CampaignKind::kCoreExpression;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;  // sorted by trial
  /// Case-mix tallies ("invertible", "sandwich_applicable", ...), so an
  /// empty violation list can be told apart from a vacuous run.
  std::map<std::string, std::size_t> counters;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return violations.empty(); }
};

/// Runs one trial with an explicit sub-seed; the unit of replay.
FuzzReport run_trial(CampaignKind kind, const GeneratorConfig& cfg, std::uint64_t sub_seed);

/// `threads` workers pull trial indices; the report is identical for any
/// thread count.
FuzzReport fuzz_campaign(CampaignKind kind, std::size_t trials, const GeneratorConfig& cfg,
                         unsigned threads = 1);

struct Witness {
  std::uint64_t seed = 0;
  Matrix t;
  Matrix delta_t;
};

/// Shows that keeping the null space and the rank does not make the
/// expression a core inverse.
struct NullSpaceWitnessReport {
  bool fixture_null_space_equal = false;
  bool fixture_rank_equal = false;
  std::size_t fixture_rank = 0;
  bool fixture_invertible = false;
  bool fixture_is_core_of_tbar = true;
  bool fixture_core_differs = false;
  std::size_t search_trials = 0;
  std::vector<Witness> witnesses;
};

/// Checks the reference range-violating case, then searches `search_trials`
/// random 4x4 rank-3 instances dT = M T for more witnesses.
/// Throws TheoremFalsificationError if the reference case lacks a stated property.
NullSpaceWitnessReport null_space_witness_demo(std::size_t search_trials = 200,
                                               std::uint64_t seed = 0);

}  // namespace ginv::harness
