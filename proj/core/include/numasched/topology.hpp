#ifndef NUMASCHED_TOPOLOGY_HPP
#define NUMASCHED_TOPOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numasched {

// Machine shape: L NUMA nodes, K cores (thread slots) per node, N threads
// of one parallel application. Every thread must be placeable: N <= L * K.
struct Topology {
  int nodes;
  int cores_per_node;
  int threads;

  Topology(int nodes_, int cores_per_node_, int threads_)
      : nodes(nodes_), cores_per_node(cores_per_node_), threads(threads_) {
    if (nodes < 1) throw std::invalid_argument("topology: nodes must be >= 1");
    if (cores_per_node < 1)
      throw std::invalid_argument("topology: cores_per_node must be >= 1");
    if (threads < 1)
      throw std::invalid_argument("topology: threads must be >= 1");
    if (static_cast<long long>(threads) >
        static_cast<long long>(nodes) * cores_per_node)
      throw std::invalid_argument(
          "topology: threads (" + std::to_string(threads) +
          ") exceed total core slots (" +
          std::to_string(static_cast<long long>(nodes) * cores_per_node) + ")");
  }

  int total_slots() const { return nodes * cores_per_node; }

  bool operator==(const Topology&) const = default;
};

// DRAM access latencies in CPU cycles. Remote must not be cheaper than
// local; that asymmetry is the whole premise.
struct LatencyModel {
  std::uint64_t local_cycles;
  std::uint64_t remote_cycles;

  LatencyModel(std::uint64_t local, std::uint64_t remote)
      : local_cycles(local), remote_cycles(remote) {
    if (local == 0) throw std::invalid_argument("latency: local must be > 0");
    if (remote < local)
      throw std::invalid_argument("latency: remote must be >= local");
  }

  bool operator==(const LatencyModel&) const = default;
};

}  // namespace numasched

#endif  // NUMASCHED_TOPOLOGY_HPP
