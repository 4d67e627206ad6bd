#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

/// Acyclic s-t graph in which every retained vertex lies on some s-t path.
///
/// Vertex and edge ids are those of the input graph; edges that were pruned
/// are simply absent from the adjacency lists. For a DAG produced by
/// build_sp_dag every edge is tight (dist[head] == dist[tail] + weight) and
/// the s-t paths are exactly the shortest s-t paths of the input.
class SpDag {
 public:
  /// Restricts an arbitrary digraph with terminals to the vertices on s-t
  /// paths. Throws InputError if that part is cyclic or t is unreachable.
  static SpDag from_dag(const WeightedDigraph& dag);

  int vertex_count() const { return vertex_count_; }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }

  bool has_vertex(VertexId v) const { return v >= 1 && v <= vertex_count_ && vertex_kept_[v]; }
  bool has_edge(EdgeId id) const {
    return id >= 1 && id <= static_cast<int>(edges_.size()) && edge_kept_[id - 1];
  }
  /// Oriented edge (for undirected inputs, tail is the endpoint nearer s).
  const Edge& edge(EdgeId id) const { return edges_[id - 1]; }
  /// Number of edges of the input graph, retained or not.
  int input_edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const EdgeId> edge_ids() const { return kept_edges_; }
  std::span<const VertexId> topological_order() const { return topo_; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }

  /// Distances from s in the input graph (empty for from_dag inputs).
  const std::vector<Weight>& distances() const { return dist_; }

  /// Position of v in topological_order(), or -1 when v was pruned.
  int topo_index(VertexId v) const { return topo_index_[v]; }

 private:
  friend SpDag build_sp_dag(const WeightedDigraph&);
  friend SpDag build_sp_dag(const WeightedMultigraph&);
  friend struct SourceContraction contract_source_chain(const SpDag&);

  SpDag(int vertex_count, std::vector<Edge> oriented, std::vector<bool> candidate,
        VertexId source, VertexId target, std::vector<Weight> dist);

  int vertex_count_ = 0;
  VertexId source_ = 0;
  VertexId target_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> edge_kept_;
  std::vector<bool> vertex_kept_;
  std::vector<EdgeId> kept_edges_;
  std::vector<VertexId> topo_;
  std::vector<int> topo_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<Weight> dist_;
};

/// Keeps the edges with d_s(head) = d_s(tail) + w and the vertices that are
/// reachable from s and reach t. Throws InputError if t is unreachable,
/// terminals are missing, or some weight is < 1.
SpDag build_sp_dag(const WeightedDigraph& graph);
/// Undirected variant: each tight edge is oriented towards increasing d_s.
SpDag build_sp_dag(const WeightedMultigraph& graph);

/// While s has exactly one outgoing edge and s != t, moves s along it.
struct SourceContraction {
  SpDag dag;
  std::vector<EdgeId> prefix;  // contracted edges, in path order
};
SourceContraction contract_source_chain(const SpDag& dag);

enum class PathClass : std::uint8_t { kZero = 0, kOne = 1, kMany = 2 };

/// Number of u->v paths classified as 0, 1 or >= 2, for every ordered pair.
class UniqueReachMatrix {
 public:
  explicit UniqueReachMatrix(const SpDag& dag);

  PathClass at(VertexId from, VertexId to) const {
    return static_cast<PathClass>(cells_[static_cast<std::size_t>(from) * stride_ + to]);
  }
  bool unique(VertexId from, VertexId to) const { return at(from, to) == PathClass::kOne; }

 private:
  std::size_t stride_;
  std::vector<std::uint8_t> cells_;
};

UniqueReachMatrix unique_reach(const SpDag& dag);

/// min(cap, number of distinct from->to paths); parallel edges give distinct
/// paths and the empty path counts for from == to. Edges listed in
/// `removed` are treated as deleted.
std::int64_t count_paths_capped(const SpDag& dag, VertexId from, VertexId to, std::int64_t cap,
                                std::span<const EdgeId> removed = {});

/// Throws InputError unless `path` is a sequence of retained edges forming an
/// s-t path. Returns its vertex sequence.
std::vector<VertexId> path_vertices(const SpDag& dag, std::span<const EdgeId> path);

}  // namespace forcing
