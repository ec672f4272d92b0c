#ifndef NUMASCHED_ACCESS_MATRIX_HPP
#define NUMASCHED_ACCESS_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "numasched/topology.hpp"

namespace numasched {

// Per-quantum counter grid: counts(t, n) is the number of DRAM read
// accesses issued by thread t to memory homed on node n. Entries do not
// depend on where the thread runs; placement only decides whether each
// access is local or remote.
class AccessMatrix {
 public:
  AccessMatrix(int threads, int nodes)
      : threads_(threads), nodes_(nodes) {
    if (threads < 1 || nodes < 1)
      throw std::invalid_argument("access matrix: dimensions must be >= 1");
    counts_.assign(static_cast<std::size_t>(threads) * nodes, 0);
  }

  static AccessMatrix from_rows(
      const std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw std::invalid_argument("access matrix: empty row set");
    AccessMatrix m(static_cast<int>(rows.size()),
                   static_cast<int>(rows.front().size()));
    for (int t = 0; t < m.threads_; ++t) {
      if (static_cast<int>(rows[t].size()) != m.nodes_)
        throw std::invalid_argument("access matrix: ragged rows");
      for (int n = 0; n < m.nodes_; ++n) m.at(t, n) = rows[t][n];
    }
    return m;
  }

  int threads() const { return threads_; }
  int nodes() const { return nodes_; }

  std::uint64_t& at(int thread, int node) {
    return counts_[static_cast<std::size_t>(thread) * nodes_ + node];
  }
  std::uint64_t at(int thread, int node) const {
    return counts_[static_cast<std::size_t>(thread) * nodes_ + node];
  }

  std::uint64_t row_total(int thread) const {
    std::uint64_t sum = 0;
    for (int n = 0; n < nodes_; ++n) sum += at(thread, n);
    return sum;
  }

  std::uint64_t grand_total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) sum += c;
    return sum;
  }

  bool matches(const Topology& topo) const {
    return threads_ == topo.threads && nodes_ == topo.nodes;
  }

  bool operator==(const AccessMatrix&) const = default;

 private:
  int threads_;
  int nodes_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace numasched

#endif  // NUMASCHED_ACCESS_MATRIX_HPP
