#include <benchmark/benchmark.h>

#include "gframe/gframe.hpp"

namespace {

using namespace gframe;

// m blocks of size k on C^d, each a weighted coisometry.
ReconstructionSystem projective_system(std::size_t m, Eigen::Index k, Eigen::Index d) {
  Rng rng(42);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < m; ++i) blocks.emplace_back((1.0 + 0.1 * static_cast<double>(i)) * random_coisometry(k, d, rng));
  return ReconstructionSystem(std::move(blocks));
}

ReconstructionSystem gaussian_system(std::size_t m, Eigen::Index k, Eigen::Index d) {
  Rng rng(7);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < m; ++i) blocks.emplace_back(gaussian_matrix(k, d, rng));
  return ReconstructionSystem(std::move(blocks));
}

void BM_FrameOperator(benchmark::State& state) {
  const auto d = state.range(0);
  const auto v = gaussian_system(8, d / 2, d);
  for (auto _ : state) benchmark::DoNotOptimize(frame_operator(v));
}
BENCHMARK(BM_FrameOperator)->Arg(8)->Arg(32)->Arg(128);

void BM_CanonicalDual(benchmark::State& state) {
  const auto d = state.range(0);
  const auto v = gaussian_system(8, d / 2, d);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_dual(v));
}
BENCHMARK(BM_CanonicalDual)->Arg(8)->Arg(32)->Arg(128);

void BM_OptimalDualTwoError(benchmark::State& state) {
  const auto d = state.range(0);
  const auto v = projective_system(8, d / 2, d);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_dual_two_error(v));
}
BENCHMARK(BM_OptimalDualTwoError)->Arg(8)->Arg(32)->Arg(128);

void BM_NearestProjective(benchmark::State& state) {
  const auto d = state.range(0);
  const auto v = gaussian_system(8, d / 2, d);
  for (auto _ : state) benchmark::DoNotOptimize(nearest_projective(v));
}
BENCHMARK(BM_NearestProjective)->Arg(8)->Arg(32);

void BM_WceMinimize(benchmark::State& state) {
  const auto v = gaussian_system(6, 2, 6);
  const int iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wce_minimize(v, {.iterations = iterations}));
}
BENCHMARK(BM_WceMinimize)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_DualManifoldSample(benchmark::State& state) {
  const auto v = gaussian_system(6, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(dual_manifold_sample(v, 1, 100));
}
BENCHMARK(BM_DualManifoldSample)->Unit(benchmark::kMillisecond);

}  // namespace
