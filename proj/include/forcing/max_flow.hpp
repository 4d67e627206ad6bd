#pragma once

#include <cstdint>
#include <vector>

namespace forcing {

/// Directed flow network for unit / "infinite" capacities. Nodes are 0-based.
class FlowNetwork {
 public:
  /// Any arc whose capacity is >= `infinity` counts as uncuttable. Choose
  /// `infinity` larger than the sum of all finite capacities.
  FlowNetwork(int node_count, std::int64_t infinity);

  /// Returns the arc index (0-based, in insertion order).
  int add_arc(int from, int to, std::int64_t capacity);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size() / 2); }
  std::int64_t infinity() const { return infinity_; }

  struct Cut {
    std::int64_t value = 0;
    std::vector<int> arcs;          // saturated arcs leaving the source side
    std::vector<bool> source_side;  // residual reachability from the source
  };

  /// Edmonds-Karp max flow followed by a residual sweep for the minimum cut.
  /// Throws InputError if source and sink are joined by uncuttable arcs.
  Cut max_flow_min_cut(int source, int sink) const;

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
  };
  std::int64_t infinity_;
  std::vector<Arc> arcs_;  // arc 2i forward, 2i + 1 its residual twin
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace forcing
