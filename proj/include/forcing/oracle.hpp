#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matroid.hpp"
#include "forcing/sp_dag.hpp"

namespace forcing {

/// Hard limits for the exhaustive procedures, checked before any
/// enumeration starts. Exceeding one throws ResourceLimitError.
struct EnumerationBudget {
  int max_vertices = 7;
  int max_edges = 64;  // also the universe size for subset searches
  int max_ground = 10;
  std::int64_t max_solutions = 10'000;
  std::int64_t max_subsets = 50'000'000;  // candidate sets examined per search
};

using Solution = std::vector<int>;  // ascending ids
using SolutionFamily = std::vector<Solution>;

/// All s-t paths of the DAG as edge-id sequences, lexicographic.
std::vector<std::vector<EdgeId>> enumerate_st_paths(const SpDag& dag,
                                                    const EnumerationBudget& budget = {});

/// Shortest s-t paths of a raw digraph by enumerating every simple s-t path
/// and keeping those of minimum total weight. Lexicographic by edge ids.
std::vector<std::vector<EdgeId>> enumerate_shortest_paths(const WeightedDigraph& graph,
                                                          const EnumerationBudget& budget = {});

/// Every basis (subsets of size rank, ascending and lexicographic).
SolutionFamily enumerate_bases(const Matroid& matroid, const EnumerationBudget& budget = {});

/// Bases of minimum (or maximum) total weight among `bases`.
SolutionFamily min_weight_bases(const SolutionFamily& bases, std::span<const Weight> weights);
SolutionFamily max_weight_bases(const SolutionFamily& bases, std::span<const Weight> weights);

struct BruteResult {
  int size = 0;
  Solution set;
  Solution witness;
};

/// Smallest S contained in exactly one member of the family. Sizes are
/// searched in ascending order and sets lexicographically; the reported set
/// is the lexicographically least optimum.
BruteResult brute_min_forcing(const SolutionFamily& family, const EnumerationBudget& budget = {});
/// Smallest S disjoint from exactly one member of the family.
BruteResult brute_min_antiforcing(const SolutionFamily& family,
                                  const EnumerationBudget& budget = {});

/// The same searches with the witness fixed to family[index].
BruteResult brute_min_forcing_for(const SolutionFamily& family, std::size_t index,
                                  const EnumerationBudget& budget = {});
BruteResult brute_min_antiforcing_for(const SolutionFamily& family, std::size_t index,
                                      const EnumerationBudget& budget = {});

/// Whether S is a forcing (anti-forcing) set for some member of the family.
bool is_forcing_for_family(const SolutionFamily& family, std::span<const int> set);
bool is_antiforcing_for_family(const SolutionFamily& family, std::span<const int> set);

/// Minimum hitting set size by branching on an unhit set (independent of
/// the subset scans above).
int min_hitting_set_size(const SolutionFamily& sets);

}  // namespace forcing
