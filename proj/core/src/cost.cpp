#include "numasched/cost.hpp"

#include <stdexcept>

namespace numasched {

std::uint64_t thread_cost_on_node(const AccessMatrix& matrix, int thread,
                                  int node, const LatencyModel& lat) {
  std::uint64_t cycles = 0;
  for (int n = 0; n < matrix.nodes(); ++n) {
    std::uint64_t latency =
        (n == node) ? lat.local_cycles : lat.remote_cycles;
    cycles += matrix.at(thread, n) * latency;
  }
  return cycles;
}

QuantumResult schedule_cost(const AccessMatrix& matrix,
                            const Schedule& schedule,
                            const LatencyModel& lat) {
  if (schedule.threads() != matrix.threads())
    throw std::invalid_argument("schedule_cost: thread count mismatch");

  std::uint64_t local = 0;
  std::uint64_t remote = 0;
  for (int t = 0; t < matrix.threads(); ++t) {
    int home = schedule.node_of(t);
    if (home >= matrix.nodes())
      throw std::invalid_argument("schedule_cost: node count mismatch");
    for (int n = 0; n < matrix.nodes(); ++n) {
      if (n == home)
        local += matrix.at(t, n);
      else
        remote += matrix.at(t, n);
    }
  }
  std::uint64_t cycles =
      local * lat.local_cycles + remote * lat.remote_cycles;
  return QuantumResult{0, schedule, cycles, local, remote};
}

double savings_percent(std::uint64_t baseline_cycles,
                       std::uint64_t algo_cycles) {
  if (baseline_cycles == 0) {
    if (algo_cycles == 0) return 0.0;
    throw std::invalid_argument(
        "savings_percent: zero baseline with nonzero algorithm cost");
  }
  return 100.0 *
         (static_cast<double>(baseline_cycles) -
          static_cast<double>(algo_cycles)) /
         static_cast<double>(baseline_cycles);
}

}  // namespace numasched
