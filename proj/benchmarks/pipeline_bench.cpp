#include <benchmark/benchmark.h>

#include "fourecc/cut_tree.hpp"
#include "fourecc/generators.hpp"
#include "fourecc/hashing.hpp"
#include "fourecc/reduction.hpp"

namespace {

using namespace fourecc;

// range(0) is log2 of the target edge count.
Multigraph sized(const char* family, const benchmark::State& state) {
  return generate_sized(family, std::size_t{1} << state.range(0), 17);
}

void finish(benchmark::State& state, const Multigraph& g) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
  state.counters["m"] = static_cast<double>(g.edge_count());
}

void four_ecc_pipeline(benchmark::State& state, const char* family) {
  const Multigraph g = sized(family, state);
  for (auto _ : state) benchmark::DoNotOptimize(four_ecc(g));
  finish(state, g);
}

void enumerate_cuts(benchmark::State& state, const char* family, CutMode mode) {
  const Multigraph g = sized(family, state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_3cuts(g, {mode, 1, false}));
  finish(state, g);
}

void dfs_only(benchmark::State& state, const char* family) {
  const Multigraph g = sized(family, state);
  for (auto _ : state) benchmark::DoNotOptimize(build_dfs(g, 0));
  finish(state, g);
}

void hashes(benchmark::State& state) {
  const Multigraph g = sized("three_cycles", state);
  const DfsStructure dfs = build_dfs(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(assign_compressed_hashes(g, dfs, 5));
  finish(state, g);
}

void cut_tree(benchmark::State& state) {
  const Multigraph g = sized("k4_chain", state);
  const CutSet cuts = enumerate_3cuts(g).cuts;
  const DfsStructure dfs = build_dfs(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(build_cut_tree(g, dfs, cuts));
  finish(state, g);
}

void three_ecc(benchmark::State& state) {
  // Needs a bridgeless input.
  const Multigraph g = sized("three_cycles", state);
  for (auto _ : state) benchmark::DoNotOptimize(three_ecc_components(g));
  finish(state, g);
}

}  // namespace

BENCHMARK_CAPTURE(four_ecc_pipeline, k4_chain, "k4_chain")->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(four_ecc_pipeline, three_cycles, "three_cycles")->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(four_ecc_pipeline, random_multi, "random_multi")->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate_cuts, k4_chain_det, "k4_chain", CutMode::deterministic)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate_cuts, k4_chain_rand, "k4_chain", CutMode::randomized)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(dfs_only, three_cycles, "three_cycles")->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(hashes)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(cut_tree)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(three_ecc)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
