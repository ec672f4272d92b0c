#ifndef NUMASCHED_ASSIGNMENT_HPP
#define NUMASCHED_ASSIGNMENT_HPP

#include <cstdint>
#include <vector>

#include "numasched/access_matrix.hpp"
#include "numasched/cost.hpp"
#include "numasched/schedule.hpp"
#include "numasched/topology.hpp"

namespace numasched {

// Square cost matrix over core slots. Slot s belongs to node
// s / cores_per_node; the K slots of one node carry identical cost in
// every row, which is what reduces the capacitated placement problem to a
// plain assignment problem. Rows beyond the real thread count are
// zero-cost padding.
class SlotCostMatrix {
 public:
  SlotCostMatrix(int size, int cores_per_node);

  int size() const { return size_; }
  int cores_per_node() const { return cores_per_node_; }
  int node_of_slot(int slot) const { return slot / cores_per_node_; }

  std::uint64_t& at(int row, int col) {
    return costs_[static_cast<std::size_t>(row) * size_ + col];
  }
  std::uint64_t at(int row, int col) const {
    return costs_[static_cast<std::size_t>(row) * size_ + col];
  }

 private:
  int size_;
  int cores_per_node_;
  std::vector<std::uint64_t> costs_;
};

// Minimum-cost perfect matching of a square cost matrix.
struct Assignment {
  std::vector<int> row_to_col;
  std::uint64_t total_cost;
};

struct BruteForceResult {
  Schedule schedule;
  std::uint64_t total_cycles;
};

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

// Slot cost of thread t at any slot of node s: all accesses to s are
// local, everything else remote. Pads with zero-cost rows when
// N < L * K.
SlotCostMatrix build_slot_costs(const AccessMatrix& matrix,
                                const Topology& topo,
                                const LatencyModel& lat);

// O(M^3) potential-based Hungarian method (row-by-row shortest
// augmenting paths). Among equal-cost augmenting choices the lowest
// column index wins, so the result is deterministic.
Assignment hungarian_solve(const SlotCostMatrix& costs);

// Convert a slot matching back to a node-level schedule for the real
// threads (padding rows are dropped).
Schedule assignment_to_schedule(const Assignment& assignment,
                                const Topology& topo);

// Number of capacity-respecting thread->node mappings, saturating at
// `cap` (the enumeration bound check does not need the exact count past
// that point).
std::uint64_t count_capacity_placements(const Topology& topo,
                                        std::uint64_t cap);

// Exhaustive oracle: enumerates every capacity-respecting placement in
// lexicographic order and keeps the first one achieving the minimum
// cost, i.e. the lexicographically smallest optimum. Rejects instances
// with more placements than `bound`.
BruteForceResult brute_force_optimal(
    const AccessMatrix& matrix, const Topology& topo, const LatencyModel& lat,
    std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace numasched

#endif  // NUMASCHED_ASSIGNMENT_HPP
