#ifndef NUMASCHED_SCHEDULE_HPP
#define NUMASCHED_SCHEDULE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numasched/topology.hpp"

namespace numasched {

// Total mapping thread -> node. Construction is only possible through the
// factories below, which enforce the per-node capacity bound, so a
// capacity-violating Schedule cannot exist.
class Schedule {
 public:
  // Static block placement: thread t -> node t / cores_per_node. This is
  // the no-optimization control every savings figure is measured against.
  static Schedule block(const Topology& topo) {
    std::vector<int> placement(topo.threads);
    for (int t = 0; t < topo.threads; ++t)
      placement[t] = t / topo.cores_per_node;
    return Schedule(std::move(placement));
  }

  static Schedule from_placement(const Topology& topo,
                                 std::vector<int> placement) {
    if (static_cast<int>(placement.size()) != topo.threads)
      throw std::invalid_argument("schedule: placement size != thread count");
    std::vector<int> load(topo.nodes, 0);
    for (int t = 0; t < topo.threads; ++t) {
      int node = placement[t];
      if (node < 0 || node >= topo.nodes)
        throw std::invalid_argument("schedule: node index out of range for thread " +
                                    std::to_string(t));
      if (++load[node] > topo.cores_per_node)
        throw std::invalid_argument("schedule: node " + std::to_string(node) +
                                    " over capacity");
    }
    return Schedule(std::move(placement));
  }

  int node_of(int thread) const { return placement_[thread]; }
  int threads() const { return static_cast<int>(placement_.size()); }
  const std::vector<int>& placement() const { return placement_; }

  bool operator==(const Schedule&) const = default;

 private:
  explicit Schedule(std::vector<int> placement)
      : placement_(std::move(placement)) {}

  std::vector<int> placement_;
};

}  // namespace numasched

#endif  // NUMASCHED_SCHEDULE_HPP
