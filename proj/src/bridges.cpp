#include "forcing/bridges.hpp"

#include <algorithm>

namespace forcing {

std::vector<EdgeId> find_bridges(int vertex_count, std::span<const IncidentEdge> edges) {
  // adjacency entries are (neighbor, index into edges)
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertex_count);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].u == edges[i].v) continue;
    adjacency[edges[i].u].emplace_back(edges[i].v, i);
    adjacency[edges[i].v].emplace_back(edges[i].u, i);
  }

  std::vector<int> discovery(vertex_count, -1);
  std::vector<int> low(vertex_count, 0);
  std::vector<EdgeId> result;
  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  for (int root = 0; root < vertex_count; ++root) {
    if (discovery[root] >= 0) continue;
    discovery[root] = low[root] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next < adjacency[frame.vertex].size()) {
        auto [next, edge] = adjacency[frame.vertex][frame.next++];
        if (edge == frame.parent_edge) continue;
        if (discovery[next] < 0) {
          discovery[next] = low[next] = clock++;
          stack.push_back({next, edge, 0});
        } else {
          low[frame.vertex] = std::min(low[frame.vertex], discovery[next]);
        }
        continue;
      }
      Frame done = frame;
      stack.pop_back();
      if (stack.empty()) break;
      int parent = stack.back().vertex;
      low[parent] = std::min(low[parent], low[done.vertex]);
      if (low[done.vertex] > discovery[parent]) result.push_back(edges[done.parent_edge].id);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<EdgeId> bridges(const WeightedMultigraph& graph) {
  std::vector<IncidentEdge> edges;
  edges.reserve(graph.edge_count());
  for (EdgeId id = 1; id <= graph.edge_count(); ++id) {
    edges.push_back({graph.edge(id).tail - 1, graph.edge(id).head - 1, id});
  }
  return find_bridges(graph.vertex_count(), edges);
}

}  // namespace forcing
