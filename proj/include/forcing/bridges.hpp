#pragma once

#include <span>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

struct IncidentEdge {
  int u = 0;  // endpoints are 0-based local vertex indices
  int v = 0;
  EdgeId id = 0;
};

/// Edges whose removal increases the number of connected components, by
/// low-link DFS. Parallel edges and self-loops are never bridges. Returns
/// the ids of bridges, ascending.
std::vector<EdgeId> find_bridges(int vertex_count, std::span<const IncidentEdge> edges);

std::vector<EdgeId> bridges(const WeightedMultigraph& graph);

}  // namespace forcing
