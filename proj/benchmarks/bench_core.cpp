#include <benchmark/benchmark.h>

#include "ginv/fixtures.hpp"
#include "ginv/harness.hpp"
#include "ginv/linalg.hpp"
#include "ginv/perturbation.hpp"
#include "ginv/theta.hpp"

namespace {

ginv::Matrix index_one(std::size_t dim) {
  ginv::harness::GeneratorConfig cfg;
  cfg.entry_bound = 5;
  ginv::harness::Rng rng(42 + dim);
  return ginv::harness::random_index_one_matrix(rng, dim, dim - 1, cfg);
}

void BM_Rref(benchmark::State& state) {
  const auto t = index_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ginv::rref(t));
}
BENCHMARK(BM_Rref)->DenseRange(2, 8, 2);

void BM_Determinant(benchmark::State& state) {
  const auto t = index_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ginv::determinant(t));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8, 2);

void BM_CoreInverse(benchmark::State& state) {
  const auto t = index_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ginv::core_inverse(t));
}
BENCHMARK(BM_CoreInverse)->DenseRange(2, 8, 2);

void BM_MoorePenrose(benchmark::State& state) {
  const auto t = index_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ginv::moore_penrose(t));
}
BENCHMARK(BM_MoorePenrose)->DenseRange(2, 8, 2);

void BM_AnalyzeReference(benchmark::State& state) {
  const auto fx = ginv::fixtures::range_preserving();
  const auto c = ginv::PerturbationCase::with_inverse(fx.t, fx.delta_t, fx.t_core);
  for (auto _ : state) benchmark::DoNotOptimize(ginv::analyze(c));
}
BENCHMARK(BM_AnalyzeReference);

void BM_CharacterizationTrial(benchmark::State& state) {
  ginv::harness::GeneratorConfig cfg;
  cfg.dim = 5;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ginv::harness::run_trial(ginv::harness::CampaignKind::kCharacterizations, cfg, seed++));
  }
}
BENCHMARK(BM_CharacterizationTrial);

}  // namespace

BENCHMARK_MAIN();
