#include "forcing/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

using Mask = std::uint64_t;

[[noreturn]] void over_budget(const std::string& what) {
  throw ResourceLimitError("enumeration budget exceeded: " + what);
}

// Maps ids of the family's universe to bit positions.
struct Universe {
  explicit Universe(const SolutionFamily& family, const EnumerationBudget& budget) {
    for (const auto& s : family) ids.insert(ids.end(), s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (static_cast<int>(ids.size()) > std::min(budget.max_edges, 64)) {
      over_budget("universe of " + std::to_string(ids.size()) + " elements");
    }
    for (const auto& s : family) masks.push_back(mask_of(s));
  }

  Mask mask_of(std::span<const int> set) const {
    Mask m = 0;
    for (int id : set) {
      auto it = std::lower_bound(ids.begin(), ids.end(), id);
      if (it != ids.end() && *it == id) m |= Mask{1} << (it - ids.begin());
    }
    return m;
  }

  Solution ids_of(Mask m) const {
    Solution out;
    for (; m != 0; m &= m - 1) out.push_back(ids[std::countr_zero(m)]);
    return out;
  }

  std::vector<int> ids;
  std::vector<Mask> masks;
};

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Lexicographically first k-subset of `candidates` (bit positions, which are
// ordered like ids) satisfying `accept`, or nullopt.
std::optional<Mask> first_subset(const std::vector<int>& candidates, int k,
                                 const std::function<bool(Mask)>& accept,
                                 std::int64_t& examined, std::int64_t limit) {
  const int n = static_cast<int>(candidates.size());
  if (k > n) return std::nullopt;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (++examined > limit) over_budget("subset search");
    Mask m = 0;
    for (int p : pick) m |= Mask{1} << candidates[p];
    if (accept(m)) return m;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::optional<Mask> forcing_for(const Universe& u, std::size_t index, int k,
                                std::int64_t& examined, const EnumerationBudget& budget) {
  const Mask x = u.masks[index];
  auto accept = [&](Mask s) {
    for (std::size_t j = 0; j < u.masks.size(); ++j) {
      if (j != index && (s & ~u.masks[j]) == 0) return false;
    }
    return true;
  };
  return first_subset(bits_of(x), k, accept, examined, budget.max_subsets);
}

std::optional<Mask> antiforcing_for(const Universe& u, std::size_t index, int k,
                                    std::int64_t& examined, const EnumerationBudget& budget) {
  const Mask x = u.masks[index];
  Mask useful = 0;
  for (std::size_t j = 0; j < u.masks.size(); ++j) {
    if (j == index) continue;
    if ((u.masks[j] & ~x) == 0) return std::nullopt;  // X' inside X: never separable
    useful |= u.masks[j] & ~x;
  }
  auto accept = [&](Mask s) {
    for (std::size_t j = 0; j < u.masks.size(); ++j) {
      if (j != index && (s & u.masks[j]) == 0) return false;
    }
    return true;
  };
  return first_subset(bits_of(useful), k, accept, examined, budget.max_subsets);
}

using PerMember = std::optional<Mask> (*)(const Universe&, std::size_t, int, std::int64_t&,
                                          const EnumerationBudget&);

BruteResult search(const SolutionFamily& family, std::optional<std::size_t> only, PerMember per,
                   const EnumerationBudget& budget) {
  if (family.empty()) throw InputError("solution family is empty");
  if (static_cast<std::int64_t>(family.size()) > budget.max_solutions) {
    over_budget(std::to_string(family.size()) + " solutions");
  }
  if (only && *only >= family.size()) throw InputError("witness index out of range");
  Universe universe(family, budget);
  std::int64_t examined = 0;
  const int max_k = static_cast<int>(universe.ids.size());
  for (int k = 0; k <= max_k; ++k) {
    std::optional<BruteResult> best;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (only && i != *only) continue;
      auto found = per(universe, i, k, examined, budget);
      if (!found) continue;
      Solution set = universe.ids_of(*found);
      if (!best || set < best->set) best = BruteResult{k, std::move(set), family[i]};
    }
    if (best) return *best;
  }
  throw InputError("no member of the family can be singled out (duplicate or nested solutions)");
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_st_paths(const SpDag& dag,
                                                    const EnumerationBudget& budget) {
  if (static_cast<int>(dag.topological_order().size()) > budget.max_vertices) {
    over_budget("DAG has more than " + std::to_string(budget.max_vertices) + " vertices");
  }
  if (static_cast<int>(dag.edge_ids().size()) > budget.max_edges) {
    over_budget("DAG has more than " + std::to_string(budget.max_edges) + " edges");
  }
  if (count_paths_capped(dag, dag.source(), dag.target(), budget.max_solutions + 1) >
      budget.max_solutions) {
    over_budget("more than " + std::to_string(budget.max_solutions) + " paths");
  }
  std::vector<std::vector<EdgeId>> paths;
  std::vector<EdgeId> current;
  std::function<void(VertexId)> walk = [&](VertexId u) {
    if (u == dag.target()) {
      paths.push_back(current);
      return;
    }
    for (EdgeId id : dag.out_edges(u)) {
      current.push_back(id);
      walk(dag.edge(id).head);
      current.pop_back();
    }
  };
  walk(dag.source());
  return paths;
}

std::vector<std::vector<EdgeId>> enumerate_shortest_paths(const WeightedDigraph& graph,
                                                          const EnumerationBudget& budget) {
  if (!graph.terminals()) throw InputError("graph has no terminals");
  if (graph.vertex_count() > budget.max_vertices) over_budget("too many vertices");
  if (graph.edge_count() > budget.max_edges) over_budget("too many edges");
  const auto [s, t] = *graph.terminals();
  std::vector<std::vector<EdgeId>> best;
  Weight best_weight = std::numeric_limits<Weight>::max();
  std::vector<bool> visited(graph.vertex_count() + 1, false);
  std::vector<EdgeId> current;
  std::int64_t explored = 0;
  std::function<void(VertexId, Weight)> walk = [&](VertexId u, Weight length) {
    if (++explored > budget.max_subsets) over_budget("simple path search");
    if (u == t) {
      if (length < best_weight) {
        best_weight = length;
        best.clear();
      }
      if (length == best_weight) best.push_back(current);
      return;
    }
    visited[u] = true;
    std::vector<EdgeId> out(graph.out_edges(u).begin(), graph.out_edges(u).end());
    std::sort(out.begin(), out.end());
    for (EdgeId id : out) {
      const Edge& e = graph.edge(id);
      if (visited[e.head]) continue;
      current.push_back(id);
      walk(e.head, length + e.weight);
      current.pop_back();
    }
    visited[u] = false;
  };
  walk(s, 0);
  std::sort(best.begin(), best.end());
  return best;
}

SolutionFamily enumerate_bases(const Matroid& matroid, const EnumerationBudget& budget) {
  const auto& ground = matroid.ground();
  if (static_cast<int>(ground.size()) > budget.max_ground) {
    over_budget("ground set of " + std::to_string(ground.size()) + " elements");
  }
  const int rank = matroid_rank(matroid);
  const int n = static_cast<int>(ground.size());
  SolutionFamily bases;
  std::vector<int> pick(rank);
  std::iota(pick.begin(), pick.end(), 0);
  Solution subset(rank);
  while (true) {
    for (int i = 0; i < rank; ++i) subset[i] = ground[pick[i]];
    if (matroid.is_independent(subset)) bases.push_back(subset);
    int i = rank - 1;
    while (i >= 0 && pick[i] == n - rank + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

namespace {

SolutionFamily extreme_bases(const SolutionFamily& bases, std::span<const Weight> weights,
                             bool minimum) {
  SolutionFamily out;
  std::optional<Weight> best;
  for (const auto& b : bases) {
    Weight w = 0;
    for (int e : b) w += weights[e];
    if (!best || (minimum ? w < *best : w > *best)) {
      best = w;
      out.clear();
    }
    if (w == *best) out.push_back(b);
  }
  return out;
}

}  // namespace

SolutionFamily min_weight_bases(const SolutionFamily& bases, std::span<const Weight> weights) {
  return extreme_bases(bases, weights, true);
}

SolutionFamily max_weight_bases(const SolutionFamily& bases, std::span<const Weight> weights) {
  return extreme_bases(bases, weights, false);
}

BruteResult brute_min_forcing(const SolutionFamily& family, const EnumerationBudget& budget) {
  return search(family, std::nullopt, forcing_for, budget);
}

BruteResult brute_min_antiforcing(const SolutionFamily& family, const EnumerationBudget& budget) {
  return search(family, std::nullopt, antiforcing_for, budget);
}

BruteResult brute_min_forcing_for(const SolutionFamily& family, std::size_t index,
                                  const EnumerationBudget& budget) {
  return search(family, index, forcing_for, budget);
}

BruteResult brute_min_antiforcing_for(const SolutionFamily& family, std::size_t index,
                                      const EnumerationBudget& budget) {
  return search(family, index, antiforcing_for, budget);
}

bool is_forcing_for_family(const SolutionFamily& family, std::span<const int> set) {
  int containing = 0;
  for (const auto& x : family) {
    bool contains = std::all_of(set.begin(), set.end(), [&](int e) {
      return std::find(x.begin(), x.end(), e) != x.end();
    });
    containing += contains ? 1 : 0;
  }
  return containing == 1;
}

bool is_antiforcing_for_family(const SolutionFamily& family, std::span<const int> set) {
  int avoiding = 0;
  for (const auto& x : family) {
    bool disjoint = std::none_of(set.begin(), set.end(), [&](int e) {
      return std::find(x.begin(), x.end(), e) != x.end();
    });
    avoiding += disjoint ? 1 : 0;
  }
  return avoiding == 1;
}

int min_hitting_set_size(const SolutionFamily& sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("an empty set cannot be hit");
  }
  std::function<int(std::vector<int>&, int)> solve = [&](std::vector<int>& chosen, int bound) {
    const Solution* unhit = nullptr;
    for (const auto& s : sets) {
      bool hit = std::any_of(s.begin(), s.end(), [&](int e) {
        return std::find(chosen.begin(), chosen.end(), e) != chosen.end();
      });
      if (!hit) {
        unhit = &s;
        break;
      }
    }
    if (unhit == nullptr) return static_cast<int>(chosen.size());
    if (static_cast<int>(chosen.size()) + 1 >= bound) return bound;
    int best = bound;
    for (int e : *unhit) {
      chosen.push_back(e);
      best = std::min(best, solve(chosen, best));
      chosen.pop_back();
    }
    return best;
  };
  std::vector<int> chosen;
  return solve(chosen, std::numeric_limits<int>::max());
}

}  // namespace forcing
