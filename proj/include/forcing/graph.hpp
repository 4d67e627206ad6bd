#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace forcing {

// Vertices are 1..n, edges 1..m in input order. Index 0 is never used.
using VertexId = int;
using EdgeId = int;
using Weight = std::int64_t;

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Terminals {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Terminals&, const Terminals&) = default;
};

/// Directed graph with integer weights and stable 1-based edge ids.
class WeightedDigraph {
 public:
  WeightedDigraph(int vertex_count, std::vector<Edge> edges,
                  std::optional<Terminals> terminals = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[id - 1]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  const std::optional<Terminals>& terminals() const { return terminals_; }

  bool has_positive_weights() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::optional<Terminals> terminals_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Undirected multigraph; self-loops and parallel edges are kept and are
/// distinguished by edge id. Edge::tail/head are just the two endpoints.
class WeightedMultigraph {
 public:
  WeightedMultigraph(int vertex_count, std::vector<Edge> edges,
                     std::optional<Terminals> terminals = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[id - 1]; }
  std::span<const Edge> edges() const { return edges_; }
  // Each self-loop appears once in its vertex's incidence list.
  std::span<const EdgeId> incident_edges(VertexId v) const { return incident_[v]; }
  const std::optional<Terminals>& terminals() const { return terminals_; }

  bool has_positive_weights() const;
  bool is_connected() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::optional<Terminals> terminals_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct DistanceLabeling {
  VertexId source = 0;
  std::vector<Weight> dist;  // indexed by vertex id; kUnreachable for +inf

  bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
};

/// Single-source shortest distances (Dijkstra). All weights must be >= 1.
DistanceLabeling distance_labels(const WeightedDigraph& graph, VertexId source);
/// Same, treating every edge as traversable in both directions.
DistanceLabeling distance_labels(const WeightedMultigraph& graph, VertexId source);

}  // namespace forcing
