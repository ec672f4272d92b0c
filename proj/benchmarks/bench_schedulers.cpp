#include <benchmark/benchmark.h>

#include "numasched/assignment.hpp"
#include "numasched/rng.hpp"
#include "numasched/schedulers.hpp"
#include "numasched/simulator.hpp"

using namespace numasched;

namespace {

AccessMatrix bench_matrix(const Topology& topo, std::uint64_t seed) {
  SplitMix64 rng(seed);
  AccessMatrix m(topo.threads, topo.nodes);
  for (int t = 0; t < topo.threads; ++t)
    for (int n = 0; n < topo.nodes; ++n)
      m.at(t, n) = rng.uniform_inclusive(10000);
  return m;
}

const Topology kTopo{4, 4, 16};
const LatencyModel kLat{100, 150};

void BM_Algo1(benchmark::State& state) {
  const AccessMatrix m = bench_matrix(kTopo, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(algo1_sorted_pairs(m, kTopo));
}
BENCHMARK(BM_Algo1);

void BM_Algo2(benchmark::State& state) {
  const AccessMatrix m = bench_matrix(kTopo, 2);
  for (auto _ : state) benchmark::DoNotOptimize(algo2_per_node(m, kTopo));
}
BENCHMARK(BM_Algo2);

void BM_Algo3(benchmark::State& state) {
  const AccessMatrix m = bench_matrix(kTopo, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(algo3_group_enumeration(m, kTopo));
}
BENCHMARK(BM_Algo3);

void BM_Algo4(benchmark::State& state) {
  const AccessMatrix m = bench_matrix(kTopo, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(algo4_hungarian(m, kTopo, kLat));
}
BENCHMARK(BM_Algo4);

void BM_BruteForceSmall(benchmark::State& state) {
  const Topology topo(3, 3, 9);
  const AccessMatrix m = bench_matrix(topo, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_optimal(m, topo, kLat));
}
BENCHMARK(BM_BruteForceSmall);

void BM_Synth1Simulation(benchmark::State& state) {
  SynthSpec spec;
  spec.kind = WorkloadKind::synth1;
  const Workload w = gen_synth(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_simulation(w, Algorithm::hungarian, kLat, kTopo));
}
BENCHMARK(BM_Synth1Simulation);

}  // namespace

BENCHMARK_MAIN();
