#include "forcing/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

void check_vertex(int vertex_count, VertexId v, const char* what) {
  if (v < 1 || v > vertex_count) {
    throw InputError(std::string(what) + " " + std::to_string(v) +
                     " out of range 1.." + std::to_string(vertex_count));
  }
}

void check_common(int vertex_count, std::span<const Edge> edges,
                  const std::optional<Terminals>& terminals) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges) {
    check_vertex(vertex_count, e.tail, "edge endpoint");
    check_vertex(vertex_count, e.head, "edge endpoint");
  }
  if (terminals) {
    check_vertex(vertex_count, terminals->source, "source vertex");
    check_vertex(vertex_count, terminals->target, "target vertex");
  }
}

template <typename NeighborFn>
DistanceLabeling dijkstra(int vertex_count, VertexId source, NeighborFn&& for_each_arc) {
  check_vertex(vertex_count, source, "source vertex");
  DistanceLabeling labels{source, std::vector<Weight>(vertex_count + 1, kUnreachable)};
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  labels.dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != labels.dist[u]) continue;
    for_each_arc(u, [&](VertexId v, Weight w) {
      if (d + w < labels.dist[v]) {
        labels.dist[v] = d + w;
        heap.emplace(d + w, v);
      }
    });
  }
  return labels;
}

}  // namespace

WeightedDigraph::WeightedDigraph(int vertex_count, std::vector<Edge> edges,
                                 std::optional<Terminals> terminals)
    : vertex_count_(vertex_count), edges_(std::move(edges)), terminals_(terminals) {
  check_common(vertex_count_, edges_, terminals_);
  out_.resize(vertex_count_ + 1);
  in_.resize(vertex_count_ + 1);
  for (EdgeId id = 1; id <= edge_count(); ++id) {
    out_[edge(id).tail].push_back(id);
    in_[edge(id).head].push_back(id);
  }
}

bool WeightedDigraph::has_positive_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight >= 1; });
}

WeightedMultigraph::WeightedMultigraph(int vertex_count, std::vector<Edge> edges,
                                       std::optional<Terminals> terminals)
    : vertex_count_(vertex_count), edges_(std::move(edges)), terminals_(terminals) {
  check_common(vertex_count_, edges_, terminals_);
  incident_.resize(vertex_count_ + 1);
  for (EdgeId id = 1; id <= edge_count(); ++id) {
    const Edge& e = edge(id);
    incident_[e.tail].push_back(id);
    if (e.head != e.tail) incident_[e.head].push_back(id);
  }
}

bool WeightedMultigraph::has_positive_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight >= 1; });
}

bool WeightedMultigraph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<VertexId> parent(vertex_count_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertex_count_;
  for (const Edge& e : edges_) {
    VertexId a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

DistanceLabeling distance_labels(const WeightedDigraph& graph, VertexId source) {
  if (!graph.has_positive_weights()) throw InputError("shortest-path input requires weights >= 1");
  return dijkstra(graph.vertex_count(), source, [&](VertexId u, auto&& relax) {
    for (EdgeId id : graph.out_edges(u)) relax(graph.edge(id).head, graph.edge(id).weight);
  });
}

DistanceLabeling distance_labels(const WeightedMultigraph& graph, VertexId source) {
  if (!graph.has_positive_weights()) throw InputError("shortest-path input requires weights >= 1");
  return dijkstra(graph.vertex_count(), source, [&](VertexId u, auto&& relax) {
    for (EdgeId id : graph.incident_edges(u)) {
      const Edge& e = graph.edge(id);
      relax(e.tail == u ? e.head : e.tail, e.weight);
    }
  });
}

}  // namespace forcing
