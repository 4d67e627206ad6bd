#pragma once

#include <limits>
#include <span>
#include <vector>

#include "forcing/sp_dag.hpp"

namespace forcing {

/// A (anti-)forcing set together with the unique solution it certifies.
struct ForcingResult {
  std::vector<EdgeId> set;      // ascending ids
  std::vector<EdgeId> witness;  // s-t path in path order

  int size() const { return static_cast<int>(set.size()); }
};

/// OPT values of the forcing-set dynamic program, indexed by edge / vertex
/// id. opt_vertex[v] is the smallest forcing set for the s-v paths, and
/// opt_edge[e] the smallest one that contains e.
struct ForcingDpTable {
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  std::vector<int> opt_edge;
  std::vector<int> opt_vertex;
  std::vector<VertexId> edge_pred_vertex;  // w attaining the minimum for OPT[e]
  std::vector<EdgeId> vertex_pred_edge;    // incoming edge attaining OPT[v]
};

/// Fills the table in topological order. Ties go to the smallest vertex id,
/// then the smallest edge id.
ForcingDpTable forcing_dp_table(const SpDag& dag, const UniqueReachMatrix& reach);

/// Segment test: with the edges of `set` in path order e_i = (t_i, s_i),
/// s_0 = s and t_{k+1} = t, every s_i -> t_{i+1} must be the only path.
/// Throws InputError if `path` is not an s-t path of the DAG or `set` has an
/// edge outside it.
bool is_forcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path,
                             std::span<const EdgeId> set);

/// Minimum forcing set over all shortest s-t paths, O(nm).
ForcingResult min_forcing_set(const SpDag& dag);

/// Minimum forcing set for the given s-t path.
ForcingResult min_forcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path);

/// The edges of the only from->to path. Requires reach.unique(from, to).
std::vector<EdgeId> unique_path(const SpDag& dag, const UniqueReachMatrix& reach, VertexId from,
                                VertexId to);

}  // namespace forcing
