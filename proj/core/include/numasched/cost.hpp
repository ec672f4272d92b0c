#ifndef NUMASCHED_COST_HPP
#define NUMASCHED_COST_HPP

#include <cstdint>

#include "numasched/access_matrix.hpp"
#include "numasched/schedule.hpp"
#include "numasched/topology.hpp"

namespace numasched {

// Cycle cost of one quantum under one placement, decomposed into local
// and remote access tallies.
struct QuantumResult {
  int quantum_index;  // 1-based; 0 when not produced by the simulator loop
  Schedule schedule_used;
  std::uint64_t total_cycles;
  std::uint64_t local_accesses;
  std::uint64_t remote_accesses;
};

// total_cycles = sum over (t, n) of counts(t, n) * (local if the schedule
// runs t on n, remote otherwise).
QuantumResult schedule_cost(const AccessMatrix& matrix,
                            const Schedule& schedule,
                            const LatencyModel& lat);

// Cycle cost of running thread `t` on node `node`: all of the thread's
// accesses to `node` are local, everything else remote.
std::uint64_t thread_cost_on_node(const AccessMatrix& matrix, int thread,
                                  int node, const LatencyModel& lat);

// 100 * (baseline - algo) / baseline; negative when the algorithm loses.
// baseline == 0 is only meaningful when algo == 0 too (empty workload).
double savings_percent(std::uint64_t baseline_cycles,
                       std::uint64_t algo_cycles);

}  // namespace numasched

#endif  // NUMASCHED_COST_HPP
