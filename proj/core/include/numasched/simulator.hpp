#ifndef NUMASCHED_SIMULATOR_HPP
#define NUMASCHED_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numasched/cost.hpp"
#include "numasched/schedulers.hpp"
#include "numasched/workload.hpp"

namespace numasched {

struct SimulationReport {
  Algorithm algorithm;
  std::vector<QuantumResult> per_quantum;  // quantum_index is 1-based
  std::uint64_t total_cycles;
  std::uint64_t baseline_total_cycles;
  std::uint64_t baseline_remote_accesses;
  std::uint64_t remote_accesses;
  double savings;  // percent vs the static block baseline
};

struct ExperimentSpec {
  // synth workload templates to run (seed field is the template seed;
  // replication r runs with seed base_seed + r), or a trace file instead
  std::vector<SynthSpec> synth;
  std::optional<std::string> trace_path;
  std::vector<Algorithm> algorithms;
  std::vector<LatencyModel> latencies;
  int replications = 1;
  std::uint64_t base_seed = 0;
};

struct AggregateCell {
  std::string workload;  // synth1 / synth2 / synth3 / trace
  Algorithm algorithm;
  LatencyModel latency;
  int replications;
  double mean_savings;
  double stddev_savings;  // sample stddev; 0 for a single replication
};

// The quantum loop: quantum 1 runs on the block baseline schedule (there
// is no counter history yet); the schedule for quantum q+1 is computed
// from quantum q's counters. The baseline keeps the block schedule for
// every quantum.
SimulationReport run_simulation(const Workload& workload, Algorithm algorithm,
                                const LatencyModel& lat,
                                const Topology& topo);

// The schedule sequence the loop produces, one entry per quantum. The
// greedy algorithms never read the latency model, so their sequence can
// be re-costed across a latency sweep without recomputation.
std::vector<Schedule> schedule_sequence(const Workload& workload,
                                        Algorithm algorithm,
                                        const LatencyModel& lat,
                                        const Topology& topo);

// Paired replication: replication r generates one workload per synth kind
// with seed base_seed + r and runs every (algorithm, latency) pair on
// that same workload. Replications execute in parallel; aggregation order
// is fixed as (workload, algorithm, latency).
std::vector<AggregateCell> run_replicated(const ExperimentSpec& spec,
                                          const Topology& topo);

// Full Cartesian product of workloads x algorithms x latencies;
// run_replicated already produces exactly that grid.
std::vector<AggregateCell> sensitivity_sweep(const ExperimentSpec& spec,
                                             const Topology& topo);

}  // namespace numasched

#endif  // NUMASCHED_SIMULATOR_HPP
