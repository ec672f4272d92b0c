#include "numasched/schedulers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "numasched/assignment.hpp"

namespace numasched {

namespace {

void require_match(const AccessMatrix& matrix, const Topology& topo,
                   const char* who) {
  if (!matrix.matches(topo))
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// Lexicographic order on thread groups encoded as bitmasks: the group
// whose smallest differing member index is lower comes first.
bool group_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  return (a & (diff & -diff)) != 0;
}

}  // namespace

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::sorted_pairs: return "algo1";
    case Algorithm::per_node: return "algo2";
    case Algorithm::group_enumeration: return "algo3";
    case Algorithm::hungarian: return "algo4";
  }
  throw std::invalid_argument("unknown algorithm");
}

Schedule algo1_sorted_pairs(const AccessMatrix& matrix,
                            const Topology& topo) {
  require_match(matrix, topo, "algo1");

  struct Entry {
    std::uint64_t count;
    int thread;
    int node;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(topo.threads) * topo.nodes);
  for (int t = 0; t < topo.threads; ++t)
    for (int n = 0; n < topo.nodes; ++n)
      entries.push_back({matrix.at(t, n), t, n});

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.thread != b.thread) return a.thread < b.thread;
    return a.node < b.node;
  });

  std::vector<int> placement(topo.threads, -1);
  std::vector<int> load(topo.nodes, 0);
  int assigned = 0;
  for (const Entry& e : entries) {
    if (assigned == topo.threads) break;
    if (placement[e.thread] != -1) continue;
    if (load[e.node] == topo.cores_per_node) continue;
    placement[e.thread] = e.node;
    ++load[e.node];
    ++assigned;
  }
  return Schedule::from_placement(topo, std::move(placement));
}

Schedule algo2_per_node(const AccessMatrix& matrix, const Topology& topo) {
  require_match(matrix, topo, "algo2");

  std::vector<int> pool(topo.threads);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> placement(topo.threads, -1);

  for (int node = 0; node < topo.nodes && !pool.empty(); ++node) {
    std::sort(pool.begin(), pool.end(), [&](int a, int b) {
      std::uint64_t ca = matrix.at(a, node), cb = matrix.at(b, node);
      if (ca != cb) return ca > cb;
      return a < b;
    });
    const int take = std::min<int>(topo.cores_per_node,
                                   static_cast<int>(pool.size()));
    for (int i = 0; i < take; ++i) placement[pool[i]] = node;
    pool.erase(pool.begin(), pool.begin() + take);
  }
  return Schedule::from_placement(topo, std::move(placement));
}

std::uint64_t group_enumeration_candidates(int threads, int group_size,
                                           int nodes) {
  if (group_size > threads) return 0;
  std::uint64_t c = 1;
  for (int i = 0; i < group_size; ++i) {
    std::uint64_t next;
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(threads - i),
                               &next))
      return std::uint64_t{1} << 63;
    c = next / (i + 1);
  }
  std::uint64_t total;
  if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(nodes), &total))
    return std::uint64_t{1} << 63;
  return total;
}

namespace detail {

std::vector<GroupCandidate> build_group_candidates(const AccessMatrix& matrix,
                                                   const Topology& topo) {
  const int N = topo.threads;
  const int K = std::min(topo.cores_per_node, N);

  std::vector<GroupCandidate> candidates;
  std::vector<int> members(K);
  // enumerate K-combinations of threads in lexicographic order
  auto emit = [&](auto&& self, int pos, int start,
                  std::uint64_t mask) -> void {
    if (pos == K) {
      for (int node = 0; node < topo.nodes; ++node) {
        std::uint64_t sum = 0;
        for (int i = 0; i < K; ++i) sum += matrix.at(members[i], node);
        candidates.push_back({sum, mask, node});
      }
      return;
    }
    for (int t = start; t <= N - (K - pos); ++t) {
      members[pos] = t;
      self(self, pos + 1, t + 1, mask | (std::uint64_t{1} << t));
    }
  };
  emit(emit, 0, 0, 0);

  std::sort(candidates.begin(), candidates.end(),
            [](const GroupCandidate& a, const GroupCandidate& b) {
              if (a.sum != b.sum) return a.sum > b.sum;
              if (a.member_mask != b.member_mask)
                return group_lex_less(a.member_mask, b.member_mask);
              return a.node < b.node;
            });
  return candidates;
}

}  // namespace detail

Schedule algo3_group_enumeration(const AccessMatrix& matrix,
                                 const Topology& topo, std::uint64_t bound) {
  require_match(matrix, topo, "algo3");
  if (topo.threads > 63)
    throw std::invalid_argument("algo3: more than 63 threads unsupported");
  const std::uint64_t candidates_needed = group_enumeration_candidates(
      topo.threads, std::min(topo.cores_per_node, topo.threads), topo.nodes);
  if (candidates_needed > bound)
    throw std::invalid_argument(
        "algo3: enumeration bound exceeded (" +
        std::to_string(candidates_needed) + " candidates > bound " +
        std::to_string(bound) + ")");

  const auto candidates = detail::build_group_candidates(matrix, topo);

  std::vector<int> placement(topo.threads, -1);
  std::vector<char> node_taken(topo.nodes, 0);
  std::uint64_t assigned_mask = 0;
  int assigned = 0;
  const int K = std::min(topo.cores_per_node, topo.threads);

  for (const auto& c : candidates) {
    if (topo.threads - assigned < K) break;
    if (node_taken[c.node]) continue;
    if ((c.member_mask & assigned_mask) != 0) continue;
    for (int t = 0; t < topo.threads; ++t)
      if (c.member_mask & (std::uint64_t{1} << t)) placement[t] = c.node;
    assigned_mask |= c.member_mask;
    assigned += K;
    node_taken[c.node] = 1;
  }

  // Fewer than K threads left (only when N is not a multiple of K): one
  // final smaller group goes to the free node with the highest summed
  // count.
  if (assigned < topo.threads) {
    std::vector<int> rest;
    for (int t = 0; t < topo.threads; ++t)
      if (placement[t] == -1) rest.push_back(t);
    int best_node = -1;
    std::uint64_t best_sum = 0;
    for (int node = 0; node < topo.nodes; ++node) {
      if (node_taken[node]) continue;
      std::uint64_t sum = 0;
      for (int t : rest) sum += matrix.at(t, node);
      if (best_node == -1 || sum > best_sum) {
        best_node = node;
        best_sum = sum;
      }
    }
    for (int t : rest) placement[t] = best_node;
  }
  return Schedule::from_placement(topo, std::move(placement));
}

Schedule algo4_hungarian(const AccessMatrix& matrix, const Topology& topo,
                         const LatencyModel& lat) {
  require_match(matrix, topo, "algo4");
  const SlotCostMatrix costs = build_slot_costs(matrix, topo, lat);
  return assignment_to_schedule(hungarian_solve(costs), topo);
}

Schedule run_algorithm(Algorithm algo, const AccessMatrix& matrix,
                       const Topology& topo, const LatencyModel& lat) {
  switch (algo) {
    case Algorithm::sorted_pairs: return algo1_sorted_pairs(matrix, topo);
    case Algorithm::per_node: return algo2_per_node(matrix, topo);
    case Algorithm::group_enumeration:
      return algo3_group_enumeration(matrix, topo);
    case Algorithm::hungarian: return algo4_hungarian(matrix, topo, lat);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace numasched
