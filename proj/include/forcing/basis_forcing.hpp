#pragma once

#include <span>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matroid.hpp"

namespace forcing {

/// Element weights indexed by element id (index 0 unused).
using ElementWeights = std::vector<Weight>;

/// One round of the weight-class sweep: the class E_i of weight w_i, the
/// basis B_i chosen inside it, its loops L_i and the elements S_i added to
/// the output set.
struct WeightClassRecord {
  Weight weight = 0;
  std::vector<ElementId> elements;
  std::vector<ElementId> basis_part;
  std::vector<ElementId> loops;
  std::vector<ElementId> added;
};

struct BasisForcingResult {
  std::vector<ElementId> set;    // ascending
  std::vector<ElementId> basis;  // the certified minimum-weight basis, ascending
  std::vector<WeightClassRecord> trace;

  int size() const { return static_cast<int>(set.size()); }
};

/// Minimum anti-forcing set for the minimum-weight bases. Processes weight
/// classes in increasing order; in each class keeps a basis of the current
/// (contracted) matroid restricted to the class, adds the remaining non-loop
/// elements to S, and contracts the class.
BasisForcingResult min_antiforcing_min_bases(const MatroidPtr& matroid,
                                             std::span<const Weight> weights);

/// Minimum forcing set for the minimum-weight bases, as the anti-forcing
/// problem on the dual matroid with negated weights. The trace is that of
/// the dual run (weights negated, basis parts are dual-basis parts).
BasisForcingResult min_forcing_min_bases(const MatroidPtr& matroid,
                                         std::span<const Weight> weights);

/// Same, for one given minimum-weight basis. Throws InputError if `basis` is
/// not a basis or not of minimum weight.
BasisForcingResult antiforcing_for_basis(const MatroidPtr& matroid,
                                         std::span<const Weight> weights,
                                         std::span<const ElementId> basis);
BasisForcingResult forcing_for_basis(const MatroidPtr& matroid, std::span<const Weight> weights,
                                     std::span<const ElementId> basis);

/// Graph-native sweeps with a union-find over contracted vertices,
/// O(m log n). Weights are the edge weights of the graph, which must be
/// connected. Forest edges and S are chosen in ascending edge id per class.
BasisForcingResult mst_antiforcing(const WeightedMultigraph& graph);
/// Per class, adds the forest edges that are not bridges of the class graph.
BasisForcingResult mst_forcing(const WeightedMultigraph& graph);

/// Weight of a set of elements.
Weight total_weight(std::span<const Weight> weights, std::span<const ElementId> set);

}  // namespace forcing
