#ifndef NUMASCHED_SCHEDULERS_HPP
#define NUMASCHED_SCHEDULERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "numasched/access_matrix.hpp"
#include "numasched/schedule.hpp"
#include "numasched/topology.hpp"

namespace numasched {

enum class Algorithm { sorted_pairs = 1, per_node = 2, group_enumeration = 3, hungarian = 4 };

std::string algorithm_name(Algorithm algo);

// Greedy scan of all (thread, node, count) triples in descending count
// order; a thread is fixed at its first surviving triple, a node stops
// accepting once full.
Schedule algo1_sorted_pairs(const AccessMatrix& matrix, const Topology& topo);

// Nodes in ascending order each take the top-K remaining threads by
// access count to that node.
Schedule algo2_per_node(const AccessMatrix& matrix, const Topology& topo);

// Enumerates every (K-thread group, node) pair, sorts by summed group
// access count descending, and assigns greedily; each node receives at
// most one group.
Schedule algo3_group_enumeration(const AccessMatrix& matrix,
                                 const Topology& topo,
                                 std::uint64_t bound = 10'000'000);

// Optimal placement: slot-expanded Hungarian matching on latency-weighted
// costs. The only scheduler that reads the latency model.
Schedule algo4_hungarian(const AccessMatrix& matrix, const Topology& topo,
                         const LatencyModel& lat);

Schedule run_algorithm(Algorithm algo, const AccessMatrix& matrix,
                       const Topology& topo, const LatencyModel& lat);

// C(N, K) * L, the candidate list size algo3 sorts; saturates at 2^63.
std::uint64_t group_enumeration_candidates(int threads, int group_size,
                                           int nodes);

namespace detail {

struct GroupCandidate {
  std::uint64_t sum;
  std::uint64_t member_mask;  // bit t set when thread t is in the group
  int node;
};

// All (group, node) candidates in the tie-canonical order algo3 scans.
std::vector<GroupCandidate> build_group_candidates(const AccessMatrix& matrix,
                                                   const Topology& topo);

}  // namespace detail

}  // namespace numasched

#endif  // NUMASCHED_SCHEDULERS_HPP
