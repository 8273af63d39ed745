// Serial reference vs OpenMP paths of the orbit kernels on E8 data.
#include <benchmark/benchmark.h>

#include "lieaut/kernels.hpp"
#include "lieaut/rootdata.hpp"
#include "lieaut/weyl.hpp"

namespace {

using lieaut::kernels::Exec;

const lieaut::RootDatum& e8() {
  static const lieaut::RootDatum rd = lieaut::build_root_datum(lieaut::DynkinType::make(lieaut::Family::E, 8));
  return rd;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_ReflectionTables(benchmark::State& state) {
  const auto& rd = e8();
  for (auto _ : state) benchmark::DoNotOptimize(lieaut::kernels::reflection_tables(rd.root_coords, rd.cartan, exec_of(state)));
}

void BM_OrderedPairTables(benchmark::State& state) {
  const auto& rd = e8();
  const auto tables = lieaut::simple_reflection_tables(rd, Exec::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(lieaut::kernels::ordered_pair_tables(tables, rd.num_roots(), exec_of(state)));
}

void BM_OrderedPairOrbits(benchmark::State& state) {
  const auto& rd = e8();
  const auto tables = lieaut::simple_reflection_tables(rd, Exec::serial);
  const std::size_t n = rd.num_roots();
  const auto pair_tables = lieaut::kernels::ordered_pair_tables(tables, n, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(lieaut::kernels::orbit_labels(n * n, pair_tables, exec_of(state)));
}

void BM_HyperplanePairOrbits(benchmark::State& state) {
  const auto& rd = e8();
  for (auto _ : state) benchmark::DoNotOptimize(lieaut::orbits_on_hyperplane_pairs(rd, exec_of(state)));
}

} // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_ReflectionTables)->Arg(0)->Arg(1);
BENCHMARK(BM_OrderedPairTables)->Arg(0)->Arg(1);
BENCHMARK(BM_OrderedPairOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperplanePairOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
