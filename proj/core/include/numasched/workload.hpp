#ifndef NUMASCHED_WORKLOAD_HPP
#define NUMASCHED_WORKLOAD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "numasched/access_matrix.hpp"
#include "numasched/topology.hpp"

namespace numasched {

enum class WorkloadKind { synth1, synth2, synth3, trace };

std::string workload_kind_name(WorkloadKind kind);

struct WorkloadMeta {
  WorkloadKind kind;
  std::uint64_t seed;
  // 1-based quantum indices where the access pattern changes (the first
  // quantum of each planted phase)
  std::vector<int> phase_boundaries;
};

struct Workload {
  std::vector<AccessMatrix> quanta;  // one matrix per quantum, in order
  WorkloadMeta meta;

  int size() const { return static_cast<int>(quanta.size()); }
};

struct SynthSpec {
  WorkloadKind kind = WorkloadKind::synth1;
  Topology topology{4, 4, 16};
  int quanta = 16;
  std::uint64_t seed = 0;
  std::uint64_t count_max = 10000;
  double dominance = 0.01;  // off-node counts capped at dominance*count_max
  bool balanced_planting = true;
  bool redraw_per_quantum = false;
};

int phase_count(WorkloadKind kind);

// Deterministic phase-structured workload: quantum 1 is fully random,
// the remaining quanta split into 1/2/4 phases, each phase planting a
// thread->node grouping whose preferred-node counts dominate.
Workload gen_synth(const SynthSpec& spec);

// Trace file format, line-oriented CSV:
//   numasched-trace,v1,<threads>,<nodes>,<quanta>
//   <quantum>,<thread>,<node>,<count>        (zero cells may be omitted)
Workload parse_trace(std::istream& in);
Workload parse_trace_file(const std::string& path);
void write_trace(const Workload& workload, std::ostream& out);
void write_trace_file(const Workload& workload, const std::string& path);

}  // namespace numasched

#endif  // NUMASCHED_WORKLOAD_HPP
