#include "forcing/sp_antiforcing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "forcing/errors.hpp"
#include "forcing/max_flow.hpp"

namespace forcing {

namespace {

// Capped path counts from every vertex to t in D minus the removed edges.
std::vector<std::int64_t> counts_to_target(const SpDag& dag, const std::vector<bool>& removed,
                                           std::int64_t cap) {
  std::vector<std::int64_t> counts(dag.vertex_count() + 1, 0);
  counts[dag.target()] = 1;
  auto order = dag.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId u = *it;
    if (u == dag.target()) continue;
    std::int64_t total = 0;
    for (EdgeId id : dag.out_edges(u)) {
      if (!removed[id]) total = std::min(cap, total + counts[dag.edge(id).head]);
    }
    counts[u] = total;
  }
  return counts;
}

std::vector<bool> removal_mask(const SpDag& dag, std::span<const EdgeId> set) {
  std::vector<bool> removed(dag.input_edge_count() + 1, false);
  for (EdgeId id : set) {
    if (id >= 1 && id <= dag.input_edge_count()) removed[id] = true;
  }
  return removed;
}

// Up to `limit` s-t paths of D minus the removed edges, lexicographic by edge ids.
std::vector<std::vector<EdgeId>> first_paths(const SpDag& dag, const std::vector<bool>& removed,
                                             std::size_t limit) {
  auto counts = counts_to_target(dag, removed, 1);
  std::vector<std::vector<EdgeId>> paths;
  std::vector<EdgeId> current;
  std::function<void(VertexId)> walk = [&](VertexId u) {
    if (paths.size() >= limit) return;
    if (u == dag.target()) {
      paths.push_back(current);
      return;
    }
    for (EdgeId id : dag.out_edges(u)) {
      if (removed[id] || counts[dag.edge(id).head] == 0) continue;
      current.push_back(id);
      walk(dag.edge(id).head);
      current.pop_back();
      if (paths.size() >= limit) return;
    }
  };
  if (counts[dag.source()] > 0) walk(dag.source());
  return paths;
}

ForcingResult certify(const SpDag& dag, std::vector<EdgeId> set) {
  std::sort(set.begin(), set.end());
  auto check = is_antiforcing_set(dag, set);
  if (!check.valid) throw std::logic_error("anti-forcing solver produced an invalid set");
  return {std::move(set), std::move(check.witness)};
}

class BranchAndBound {
 public:
  BranchAndBound(const SpDag& dag, std::int64_t node_limit) : dag_(dag), node_limit_(node_limit) {}

  std::optional<std::vector<EdgeId>> search(int max_size) {
    visited_.clear();
    std::vector<EdgeId> chosen;
    if (dfs(chosen, max_size)) return chosen;
    return std::nullopt;
  }

 private:
  bool dfs(std::vector<EdgeId>& chosen, int remaining) {
    if (++nodes_ > node_limit_) {
      throw ResourceLimitError("exact anti-forcing search exceeded " +
                               std::to_string(node_limit_) + " nodes");
    }
    auto removed = removal_mask(dag_, chosen);
    auto paths = first_paths(dag_, removed, 2);
    if (paths.size() == 1) return true;
    if (paths.empty() || remaining == 0) return false;
    std::vector<EdgeId> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    if (!visited_.insert(sorted).second) return false;

    // Any valid extension removes an edge of at least one of two surviving paths.
    std::vector<EdgeId> branch(paths[0]);
    branch.insert(branch.end(), paths[1].begin(), paths[1].end());
    std::sort(branch.begin(), branch.end());
    branch.erase(std::unique(branch.begin(), branch.end()), branch.end());
    for (EdgeId id : branch) {
      chosen.push_back(id);
      if (dfs(chosen, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const SpDag& dag_;
  std::int64_t node_limit_;
  std::int64_t nodes_ = 0;
  std::set<std::vector<EdgeId>> visited_;
};

}  // namespace

MultiwayCutInstance make_multiway_cut_instance(const SpDag& dag, std::span<const EdgeId> path) {
  auto terminals = path_vertices(dag, path);
  std::vector<bool> on_path(dag.input_edge_count() + 1, false);
  for (EdgeId id : path) on_path[id] = true;
  std::vector<Edge> edges;
  std::vector<EdgeId> original;
  for (EdgeId id : dag.edge_ids()) {
    if (on_path[id]) continue;
    edges.push_back(dag.edge(id));
    original.push_back(id);
  }
  return {WeightedDigraph(dag.vertex_count(), std::move(edges)), std::move(original),
          std::move(terminals)};
}

std::vector<EdgeId> solve_multiway_cut_dag(const MultiwayCutInstance& instance) {
  const WeightedDigraph& h = instance.graph;
  if (instance.terminals.size() <= 1 || h.edge_count() == 0) return {};
  const int n = h.vertex_count();
  // Node layout: v -> v (in copy), n + 1 + v -> out copy of a terminal,
  // 2n + 2 -> super source, 2n + 3 -> super sink.
  std::vector<bool> is_terminal(n + 1, false);
  for (VertexId v : instance.terminals) is_terminal[v] = true;
  auto out_node = [&](VertexId v) { return is_terminal[v] ? n + 1 + v : v; };
  const int source = 2 * n + 2;
  const int sink = 2 * n + 3;
  FlowNetwork network(2 * n + 4, static_cast<std::int64_t>(h.edge_count()) + 1);
  for (const Edge& e : h.edges()) network.add_arc(out_node(e.tail), e.head, 1);
  for (VertexId v = 1; v <= n; ++v) {
    if (!is_terminal[v]) continue;
    network.add_arc(source, out_node(v), network.infinity());
    network.add_arc(v, sink, network.infinity());
  }
  auto cut = network.max_flow_min_cut(source, sink);
  std::vector<EdgeId> result;
  for (int arc : cut.arcs) {
    if (arc >= h.edge_count()) throw std::logic_error("minimum cut used an uncuttable arc");
    result.push_back(instance.original_ids[arc]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

AntiforcingCheck is_antiforcing_set(const SpDag& dag, std::span<const EdgeId> set) {
  auto paths = first_paths(dag, removal_mask(dag, set), 2);
  if (paths.size() != 1) return {};
  return {true, std::move(paths.front())};
}

ForcingResult min_antiforcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path) {
  auto instance = make_multiway_cut_instance(dag, path);
  auto set = solve_multiway_cut_dag(instance);
  auto result = certify(dag, std::move(set));
  if (!std::equal(result.witness.begin(), result.witness.end(), path.begin(), path.end())) {
    throw std::logic_error("anti-forcing set certifies a different path");
  }
  return result;
}

std::optional<ForcingResult> min_antiforcing_set_exact(const SpDag& dag,
                                                       const ExactAntiforcingOptions& options) {
  const auto budget = options.budget;
  auto within_budget = [&](const ForcingResult& r) -> std::optional<ForcingResult> {
    if (budget && r.size() > *budget) return std::nullopt;
    return r;
  };

  if (count_paths_capped(dag, dag.source(), dag.target(), options.path_limit) <
      options.path_limit) {
    std::optional<ForcingResult> best;
    for (const auto& path : first_paths(dag, removal_mask(dag, {}), options.path_limit)) {
      auto candidate = min_antiforcing_set_for_path(dag, path);
      if (!best || candidate.size() < best->size()) best = std::move(candidate);
      if (best->size() == 0) break;
    }
    return within_budget(*best);
  }

  // Too many witnesses to enumerate: iterative deepening below the size of
  // one feasible solution (the lexicographically first path's optimum).
  auto first = first_paths(dag, removal_mask(dag, {}), 1);
  auto incumbent = min_antiforcing_set_for_path(dag, first.front());
  int limit = incumbent.size() - 1;
  if (budget) limit = std::min(limit, *budget);
  BranchAndBound search(dag, options.node_limit);
  for (int size = 0; size <= limit; ++size) {
    if (auto found = search.search(size)) return certify(dag, std::move(*found));
  }
  return within_budget(incumbent);
}

}  // namespace forcing
