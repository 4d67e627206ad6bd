#include "forcing/basis_forcing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "forcing/bridges.hpp"
#include "forcing/errors.hpp"

namespace forcing {

namespace {

void check_weights(const Matroid& matroid, std::span<const Weight> weights) {
  if (!matroid.ground().empty() && static_cast<int>(weights.size()) <= matroid.ground().back()) {
    throw InputError("weights do not cover every element");
  }
}

std::vector<ElementId> minus(std::span<const ElementId> all, std::span<const ElementId> removed) {
  std::vector<ElementId> a(all.begin(), all.end()), b(removed.begin(), removed.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Greedy minimum-weight basis, ties by ascending id.
std::vector<ElementId> min_weight_basis(const Matroid& matroid, std::span<const Weight> weights) {
  std::vector<ElementId> order = matroid.ground();
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return weights[a] < weights[b]; });
  auto basis = greedy_basis(matroid, order);
  std::sort(basis.begin(), basis.end());
  return basis;
}

void check_min_basis(const Matroid& matroid, std::span<const Weight> weights,
                     std::span<const ElementId> basis) {
  if (!is_basis(matroid, basis)) throw InputError("given set is not a basis");
  if (total_weight(weights, basis) != total_weight(weights, min_weight_basis(matroid, weights))) {
    throw InputError("given basis is not of minimum weight");
  }
}

BasisForcingResult weight_class_sweep(const MatroidPtr& matroid, std::span<const Weight> weights,
                                      std::optional<std::vector<ElementId>> pinned) {
  check_weights(*matroid, weights);
  std::map<Weight, std::vector<ElementId>> classes;
  for (ElementId e : matroid->ground()) classes[weights[e]].push_back(e);

  BasisForcingResult result;
  MatroidPtr current = matroid;
  for (auto& [weight, elements] : classes) {
    WeightClassRecord record;
    record.weight = weight;
    record.elements = elements;
    auto restricted = restrict_to(current, elements);
    if (pinned) {
      std::vector<ElementId> inside;
      std::set_intersection(pinned->begin(), pinned->end(), elements.begin(), elements.end(),
                            std::back_inserter(inside));
      if (!is_basis(*restricted, inside)) {
        throw InputError("given basis does not restrict to a basis of each weight class");
      }
      record.basis_part = std::move(inside);
    } else {
      record.basis_part = greedy_basis(*restricted);
    }
    for (ElementId e : elements) {
      if (is_loop(*restricted, e)) record.loops.push_back(e);
    }
    for (ElementId e : elements) {
      if (!std::binary_search(record.basis_part.begin(), record.basis_part.end(), e) &&
          !std::binary_search(record.loops.begin(), record.loops.end(), e)) {
        record.added.push_back(e);
      }
    }
    result.set.insert(result.set.end(), record.added.begin(), record.added.end());
    result.basis.insert(result.basis.end(), record.basis_part.begin(), record.basis_part.end());
    current = contract(current, elements, record.basis_part);
    result.trace.push_back(std::move(record));
  }
  std::sort(result.set.begin(), result.set.end());
  std::sort(result.basis.begin(), result.basis.end());
  return result;
}

BasisForcingResult through_dual(const MatroidPtr& matroid, std::span<const Weight> weights,
                                std::optional<std::vector<ElementId>> pinned) {
  check_weights(*matroid, weights);
  ElementWeights negated(weights.begin(), weights.end());
  for (Weight& w : negated) w = -w;
  if (pinned) pinned = minus(matroid->ground(), *pinned);
  auto dual_result = weight_class_sweep(dual(matroid), negated, std::move(pinned));
  BasisForcingResult result;
  result.set = std::move(dual_result.set);
  result.basis = minus(matroid->ground(), dual_result.basis);
  result.trace = std::move(dual_result.trace);
  return result;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n + 1), size(n + 1, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
  std::vector<int> parent;
  std::vector<int> size;
};

enum class GraphSweep { kAntiforcing, kForcing };

BasisForcingResult graph_sweep(const WeightedMultigraph& graph, GraphSweep mode) {
  if (!graph.is_connected()) throw InputError("spanning-tree problems need a connected graph");
  std::vector<EdgeId> order(graph.edge_count());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return graph.edge(a).weight < graph.edge(b).weight;
  });

  UnionFind components(graph.vertex_count());
  BasisForcingResult result;
  std::unordered_map<int, int> local;
  std::vector<IncidentEdge> class_edges;
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin;
    const Weight weight = graph.edge(order[begin]).weight;
    while (end < order.size() && graph.edge(order[end]).weight == weight) ++end;
    std::vector<EdgeId> ids(order.begin() + begin, order.begin() + end);
    std::sort(ids.begin(), ids.end());

    WeightClassRecord record;
    record.weight = weight;
    record.elements = ids;
    // Endpoints in the contracted graph, fixed before this class is merged.
    local.clear();
    class_edges.clear();
    for (EdgeId id : ids) {
      int a = components.find(graph.edge(id).tail);
      int b = components.find(graph.edge(id).head);
      auto la = local.try_emplace(a, static_cast<int>(local.size())).first->second;
      auto lb = local.try_emplace(b, static_cast<int>(local.size())).first->second;
      class_edges.push_back({la, lb, id});
      if (a == b) record.loops.push_back(id);
    }
    std::vector<EdgeId> class_bridges;
    if (mode == GraphSweep::kForcing) {
      class_bridges = find_bridges(static_cast<int>(local.size()), class_edges);
    }
    for (EdgeId id : ids) {
      bool loop = std::binary_search(record.loops.begin(), record.loops.end(), id);
      if (loop) continue;
      if (components.unite(graph.edge(id).tail, graph.edge(id).head)) {
        record.basis_part.push_back(id);
        if (mode == GraphSweep::kForcing &&
            !std::binary_search(class_bridges.begin(), class_bridges.end(), id)) {
          record.added.push_back(id);
        }
      } else if (mode == GraphSweep::kAntiforcing) {
        record.added.push_back(id);
      }
    }
    result.set.insert(result.set.end(), record.added.begin(), record.added.end());
    result.basis.insert(result.basis.end(), record.basis_part.begin(), record.basis_part.end());
    result.trace.push_back(std::move(record));
    begin = end;
  }
  std::sort(result.set.begin(), result.set.end());
  std::sort(result.basis.begin(), result.basis.end());
  return result;
}

}  // namespace

Weight total_weight(std::span<const Weight> weights, std::span<const ElementId> set) {
  Weight total = 0;
  for (ElementId e : set) total += weights[e];
  return total;
}

BasisForcingResult min_antiforcing_min_bases(const MatroidPtr& matroid,
                                             std::span<const Weight> weights) {
  return weight_class_sweep(matroid, weights, std::nullopt);
}

BasisForcingResult min_forcing_min_bases(const MatroidPtr& matroid,
                                         std::span<const Weight> weights) {
  return through_dual(matroid, weights, std::nullopt);
}

BasisForcingResult antiforcing_for_basis(const MatroidPtr& matroid,
                                         std::span<const Weight> weights,
                                         std::span<const ElementId> basis) {
  check_weights(*matroid, weights);
  check_min_basis(*matroid, weights, basis);
  std::vector<ElementId> pinned(basis.begin(), basis.end());
  std::sort(pinned.begin(), pinned.end());
  return weight_class_sweep(matroid, weights, std::move(pinned));
}

BasisForcingResult forcing_for_basis(const MatroidPtr& matroid, std::span<const Weight> weights,
                                     std::span<const ElementId> basis) {
  check_weights(*matroid, weights);
  check_min_basis(*matroid, weights, basis);
  return through_dual(matroid, weights, std::vector<ElementId>(basis.begin(), basis.end()));
}

BasisForcingResult mst_antiforcing(const WeightedMultigraph& graph) {
  return graph_sweep(graph, GraphSweep::kAntiforcing);
}

BasisForcingResult mst_forcing(const WeightedMultigraph& graph) {
  return graph_sweep(graph, GraphSweep::kForcing);
}

}  // namespace forcing
