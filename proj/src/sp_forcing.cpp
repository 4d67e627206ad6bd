#include "forcing/sp_forcing.hpp"

#include <algorithm>
#include <string>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

std::vector<int> positions_on_path(const SpDag& dag, std::span<const EdgeId> path) {
  std::vector<int> position(dag.input_edge_count() + 1, -1);
  for (std::size_t i = 0; i < path.size(); ++i) position[path[i]] = static_cast<int>(i);
  return position;
}

}  // namespace

std::vector<EdgeId> unique_path(const SpDag& dag, const UniqueReachMatrix& reach, VertexId from,
                                VertexId to) {
  std::vector<EdgeId> path;
  for (VertexId u = from; u != to;) {
    EdgeId next = 0;
    for (EdgeId id : dag.out_edges(u)) {
      if (reach.at(dag.edge(id).head, to) != PathClass::kZero) {
        next = id;
        break;
      }
    }
    if (next == 0) throw InputError("no path between the requested vertices");
    path.push_back(next);
    u = dag.edge(next).head;
  }
  return path;
}

ForcingDpTable forcing_dp_table(const SpDag& dag, const UniqueReachMatrix& reach) {
  const int n = dag.vertex_count();
  ForcingDpTable table;
  table.opt_edge.assign(dag.input_edge_count() + 1, ForcingDpTable::kInfinity);
  table.opt_vertex.assign(n + 1, ForcingDpTable::kInfinity);
  table.edge_pred_vertex.assign(dag.input_edge_count() + 1, 0);
  table.vertex_pred_edge.assign(n + 1, 0);

  std::vector<VertexId> ancestors_done;
  for (VertexId u : dag.topological_order()) {
    if (u == dag.source()) {
      table.opt_vertex[u] = 0;
    } else {
      for (EdgeId id : dag.in_edges(u)) {
        if (table.opt_edge[id] < table.opt_vertex[u]) {
          table.opt_vertex[u] = table.opt_edge[id];
          table.vertex_pred_edge[u] = id;
        }
      }
    }
    ancestors_done.push_back(u);

    // min{OPT[w] : w => u}; every such w precedes u in topological order.
    int best = ForcingDpTable::kInfinity;
    VertexId best_vertex = 0;
    for (VertexId w : ancestors_done) {
      if (table.opt_vertex[w] == ForcingDpTable::kInfinity || !reach.unique(w, u)) continue;
      if (table.opt_vertex[w] < best || (table.opt_vertex[w] == best && w < best_vertex)) {
        best = table.opt_vertex[w];
        best_vertex = w;
      }
    }
    if (best == ForcingDpTable::kInfinity) continue;
    for (EdgeId id : dag.out_edges(u)) {
      table.opt_edge[id] = best + 1;
      table.edge_pred_vertex[id] = best_vertex;
    }
  }
  return table;
}

bool is_forcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path,
                             std::span<const EdgeId> set) {
  path_vertices(dag, path);
  auto position = positions_on_path(dag, path);
  std::vector<int> chosen;
  for (EdgeId id : set) {
    if (id < 1 || id > dag.input_edge_count() || position[id] < 0) {
      throw InputError("edge " + std::to_string(id) + " of the set is not on the path");
    }
    chosen.push_back(position[id]);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  VertexId segment_start = dag.source();
  for (int index : chosen) {
    const Edge& e = dag.edge(path[index]);
    if (count_paths_capped(dag, segment_start, e.tail, 2) != 1) return false;
    segment_start = e.head;
  }
  return count_paths_capped(dag, segment_start, dag.target(), 2) == 1;
}

ForcingResult min_forcing_set(const SpDag& input) {
  if (input.source() == input.target()) return {};
  auto contracted = contract_source_chain(input);
  const SpDag& dag = contracted.dag;
  ForcingResult result;
  result.witness = contracted.prefix;
  if (dag.source() == dag.target()) return result;

  UniqueReachMatrix reach(dag);
  auto table = forcing_dp_table(dag, reach);

  VertexId end = 0;
  for (VertexId v : dag.topological_order()) {
    if (!reach.unique(v, dag.target()) || table.opt_vertex[v] == ForcingDpTable::kInfinity) {
      continue;
    }
    if (end == 0 || table.opt_vertex[v] < table.opt_vertex[end] ||
        (table.opt_vertex[v] == table.opt_vertex[end] && v < end)) {
      end = v;
    }
  }

  // Walk the table backwards, collecting path segments in reverse.
  std::vector<std::vector<EdgeId>> segments{unique_path(dag, reach, end, dag.target())};
  for (VertexId v = end; v != dag.source();) {
    EdgeId e = table.vertex_pred_edge[v];
    VertexId w = table.edge_pred_vertex[e];
    result.set.push_back(e);
    segments.push_back({e});
    segments.push_back(unique_path(dag, reach, w, dag.edge(e).tail));
    v = w;
  }
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    result.witness.insert(result.witness.end(), it->begin(), it->end());
  }
  std::sort(result.set.begin(), result.set.end());
  return result;
}

ForcingResult min_forcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path) {
  auto vertices = path_vertices(dag, path);
  ForcingResult result;
  result.witness.assign(path.begin(), path.end());
  if (path.empty()) return result;

  UniqueReachMatrix reach(dag);
  const int k = static_cast<int>(path.size());
  // opt[i]: smallest forcing set of the prefix ending at vertices[i] whose
  // last chosen edge is path[i - 1]; opt[0] is the empty set at s.
  std::vector<int> opt(k + 1, ForcingDpTable::kInfinity);
  std::vector<int> pred(k + 1, -1);
  opt[0] = 0;
  for (int i = 1; i <= k; ++i) {
    VertexId tail = vertices[i - 1];
    for (int j = 0; j < i; ++j) {
      if (opt[j] == ForcingDpTable::kInfinity || !reach.unique(vertices[j], tail)) continue;
      if (opt[j] + 1 < opt[i] ||
          (opt[j] + 1 == opt[i] && vertices[j] < vertices[pred[i]])) {
        opt[i] = opt[j] + 1;
        pred[i] = j;
      }
    }
  }
  int best = -1;
  for (int j = 0; j <= k; ++j) {
    if (opt[j] == ForcingDpTable::kInfinity || !reach.unique(vertices[j], dag.target())) continue;
    if (best < 0 || opt[j] < opt[best] ||
        (opt[j] == opt[best] && vertices[j] < vertices[best])) {
      best = j;
    }
  }
  for (int j = best; j > 0; j = pred[j]) result.set.push_back(path[j - 1]);
  std::sort(result.set.begin(), result.set.end());
  return result;
}

}  // namespace forcing
