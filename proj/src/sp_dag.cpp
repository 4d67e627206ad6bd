#include "forcing/sp_dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

std::vector<bool> reach(int vertex_count, VertexId start, std::span<const Edge> edges,
                        const std::vector<bool>& candidate, bool forward) {
  std::vector<std::vector<int>> adjacency(vertex_count + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!candidate[i]) continue;
    const Edge& e = edges[i];
    if (forward) {
      adjacency[e.tail].push_back(e.head);
    } else {
      adjacency[e.head].push_back(e.tail);
    }
  }
  std::vector<bool> seen(vertex_count + 1, false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

Terminals require_terminals(const std::optional<Terminals>& terminals) {
  if (!terminals) throw InputError("shortest-path problem requires terminals s and t");
  return *terminals;
}

}  // namespace

SpDag::SpDag(int vertex_count, std::vector<Edge> oriented, std::vector<bool> candidate,
             VertexId source, VertexId target, std::vector<Weight> dist)
    : vertex_count_(vertex_count),
      source_(source),
      target_(target),
      edges_(std::move(oriented)),
      dist_(std::move(dist)) {
  auto from_s = reach(vertex_count_, source_, edges_, candidate, true);
  if (!from_s[target_]) {
    throw InputError("target " + std::to_string(target_) + " is unreachable from source " +
                     std::to_string(source_));
  }
  auto to_t = reach(vertex_count_, target_, edges_, candidate, false);
  vertex_kept_.assign(vertex_count_ + 1, false);
  for (VertexId v = 1; v <= vertex_count_; ++v) vertex_kept_[v] = from_s[v] && to_t[v];

  edge_kept_.assign(edges_.size(), false);
  out_.resize(vertex_count_ + 1);
  in_.resize(vertex_count_ + 1);
  std::vector<int> indegree(vertex_count_ + 1, 0);
  for (EdgeId id = 1; id <= static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id - 1];
    if (!candidate[id - 1] || !vertex_kept_[e.tail] || !vertex_kept_[e.head]) continue;
    edge_kept_[id - 1] = true;
    kept_edges_.push_back(id);
    out_[e.tail].push_back(id);
    in_[e.head].push_back(id);
    ++indegree[e.head];
  }

  // Kahn's algorithm, smallest vertex id first among ready vertices.
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  int kept_count = 0;
  for (VertexId v = 1; v <= vertex_count_; ++v) {
    if (!vertex_kept_[v]) continue;
    ++kept_count;
    if (indegree[v] == 0) ready.push(v);
  }
  topo_index_.assign(vertex_count_ + 1, -1);
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    topo_index_[u] = static_cast<int>(topo_.size());
    topo_.push_back(u);
    for (EdgeId id : out_[u]) {
      if (--indegree[edges_[id - 1].head] == 0) ready.push(edges_[id - 1].head);
    }
  }
  if (static_cast<int>(topo_.size()) != kept_count) {
    throw InputError("s-t subgraph contains a directed cycle");
  }
}

SpDag SpDag::from_dag(const WeightedDigraph& dag) {
  auto [s, t] = require_terminals(dag.terminals());
  std::vector<Edge> edges(dag.edges().begin(), dag.edges().end());
  std::vector<bool> candidate(edges.size(), true);
  return SpDag(dag.vertex_count(), std::move(edges), std::move(candidate), s, t, {});
}

SpDag build_sp_dag(const WeightedDigraph& graph) {
  auto [s, t] = require_terminals(graph.terminals());
  auto labels = distance_labels(graph, s);
  if (!labels.reachable(t)) throw InputError("target is unreachable from source");
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::vector<bool> tight(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    tight[i] = labels.reachable(e.tail) && labels.dist[e.head] == labels.dist[e.tail] + e.weight;
  }
  return SpDag(graph.vertex_count(), std::move(edges), std::move(tight), s, t,
               std::move(labels.dist));
}

SpDag build_sp_dag(const WeightedMultigraph& graph) {
  auto [s, t] = require_terminals(graph.terminals());
  auto labels = distance_labels(graph, s);
  if (!labels.reachable(t)) throw InputError("target is unreachable from source");
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::vector<bool> tight(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (!labels.reachable(e.tail) && !labels.reachable(e.head)) continue;
    if (labels.reachable(e.head) &&
        (!labels.reachable(e.tail) || labels.dist[e.head] < labels.dist[e.tail])) {
      std::swap(e.tail, e.head);
    }
    tight[i] = labels.dist[e.head] == labels.dist[e.tail] + e.weight;
  }
  return SpDag(graph.vertex_count(), std::move(edges), std::move(tight), s, t,
               std::move(labels.dist));
}

SourceContraction contract_source_chain(const SpDag& dag) {
  std::vector<EdgeId> prefix;
  VertexId s = dag.source();
  while (s != dag.target() && dag.out_edges(s).size() == 1) {
    EdgeId id = dag.out_edges(s).front();
    prefix.push_back(id);
    s = dag.edge(id).head;
  }
  std::vector<bool> candidate = dag.edge_kept_;
  for (EdgeId id : prefix) candidate[id - 1] = false;
  SpDag contracted(dag.vertex_count_, dag.edges_, std::move(candidate), s, dag.target_, dag.dist_);
  return {std::move(contracted), std::move(prefix)};
}

UniqueReachMatrix::UniqueReachMatrix(const SpDag& dag)
    : stride_(static_cast<std::size_t>(dag.vertex_count()) + 1),
      cells_(stride_ * stride_, static_cast<std::uint8_t>(PathClass::kZero)) {
  auto order = dag.topological_order();
  std::vector<std::uint8_t> counts(stride_);
  for (std::size_t start = 0; start < order.size(); ++start) {
    std::fill(counts.begin(), counts.end(), 0);
    counts[order[start]] = 1;
    for (std::size_t i = start; i < order.size(); ++i) {
      VertexId u = order[i];
      if (counts[u] == 0) continue;
      for (EdgeId id : dag.out_edges(u)) {
        auto& c = counts[dag.edge(id).head];
        c = static_cast<std::uint8_t>(std::min(2, c + counts[u]));
      }
    }
    std::copy(counts.begin(), counts.end(), cells_.begin() + order[start] * stride_);
  }
  for (VertexId v = 0; v < static_cast<VertexId>(stride_); ++v) {
    cells_[v * stride_ + v] = static_cast<std::uint8_t>(PathClass::kOne);
  }
}

UniqueReachMatrix unique_reach(const SpDag& dag) { return UniqueReachMatrix(dag); }

std::int64_t count_paths_capped(const SpDag& dag, VertexId from, VertexId to, std::int64_t cap,
                                std::span<const EdgeId> removed) {
  if (cap < 1) throw InputError("path-count cap must be positive");
  if (from == to) return 1;
  if (!dag.has_vertex(from) || !dag.has_vertex(to)) return 0;
  std::vector<bool> gone(dag.input_edge_count() + 1, false);
  for (EdgeId id : removed) {
    if (id >= 1 && id <= dag.input_edge_count()) gone[id] = true;
  }
  std::vector<std::int64_t> counts(dag.vertex_count() + 1, 0);
  counts[from] = 1;
  auto order = dag.topological_order();
  for (std::size_t i = dag.topo_index(from); i < order.size(); ++i) {
    VertexId u = order[i];
    if (u == to) break;
    if (counts[u] == 0) continue;
    for (EdgeId id : dag.out_edges(u)) {
      if (gone[id]) continue;
      auto& c = counts[dag.edge(id).head];
      c = std::min(cap, c + counts[u]);
    }
  }
  return counts[to];
}

std::vector<VertexId> path_vertices(const SpDag& dag, std::span<const EdgeId> path) {
  std::vector<VertexId> vertices{dag.source()};
  for (EdgeId id : path) {
    if (!dag.has_edge(id)) {
      throw InputError("edge " + std::to_string(id) + " is not an edge of the shortest-path DAG");
    }
    if (dag.edge(id).tail != vertices.back()) {
      throw InputError("edge " + std::to_string(id) + " does not continue the path");
    }
    vertices.push_back(dag.edge(id).head);
  }
  if (vertices.back() != dag.target()) throw InputError("path does not end at the target");
  return vertices;
}

}  // namespace forcing
