#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "forcing/sp_dag.hpp"
#include "forcing/sp_forcing.hpp"

namespace forcing {

/// H = D - E(P) with the vertices of P as terminals. graph uses local edge
/// ids 1..m'; original_ids maps them back to ids of D.
struct MultiwayCutInstance {
  WeightedDigraph graph;
  std::vector<EdgeId> original_ids;
  std::vector<VertexId> terminals;  // in path order
};

MultiwayCutInstance make_multiway_cut_instance(const SpDag& dag, std::span<const EdgeId> path);

/// Minimum edge set meeting every directed path between two distinct
/// terminals (original ids, ascending). Terminals are split into an "in"
/// copy that keeps incoming arcs and an "out" copy that keeps outgoing arcs;
/// a super source feeds every out copy and every in copy drains into a super
/// sink, so s*-t* paths are exactly terminal-to-terminal paths without an
/// inner terminal. The graph must be acyclic.
std::vector<EdgeId> solve_multiway_cut_dag(const MultiwayCutInstance& instance);

struct AntiforcingCheck {
  bool valid = false;
  std::vector<EdgeId> witness;  // the unique surviving s-t path when valid
};

/// Whether exactly one s-t path of the DAG avoids `set`.
AntiforcingCheck is_antiforcing_set(const SpDag& dag, std::span<const EdgeId> set);

/// Minimum S, disjoint from P, such that P is the only s-t path of D - S.
ForcingResult min_antiforcing_set_for_path(const SpDag& dag, std::span<const EdgeId> path);

struct ExactAntiforcingOptions {
  /// Enumerate witness paths when the DAG has fewer s-t paths than this.
  std::int64_t path_limit = 10'000;
  /// Report "no set" instead of searching beyond this size.
  std::optional<int> budget;
  /// Branch-and-bound node limit; exceeding it throws ResourceLimitError.
  std::int64_t node_limit = 20'000'000;
};

/// Exact minimum anti-forcing set over all s-t paths (NP-hard in general).
/// Returns nullopt when a budget is set and no set of that size exists.
std::optional<ForcingResult> min_antiforcing_set_exact(const SpDag& dag,
                                                       const ExactAntiforcingOptions& options = {});

}  // namespace forcing
