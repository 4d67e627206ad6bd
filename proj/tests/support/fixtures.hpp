#pragma once

// Hand-built instances, seeded generators and small independent checkers
// shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matroid.hpp"
#include "forcing/sp_dag.hpp"

namespace forcing::testing {

inline WeightedDigraph digraph(int n, std::vector<Edge> edges, VertexId s, VertexId t) {
  return WeightedDigraph(n, std::move(edges), Terminals{s, t});
}

// s=1, a=2, b=3, t=4; edges s->a, s->b, a->t, b->t.
inline WeightedDigraph diamond() {
  return digraph(4, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}}, 1, 4);
}

// s=1, a=2, t=3.
inline WeightedDigraph chain() { return digraph(3, {{1, 2, 1}, {2, 3, 1}}, 1, 3); }

// s=1 -> a=2 | b=3 -> c=4 -> d=5 | e=6 -> t=7.
inline WeightedDigraph double_diamond() {
  return digraph(7,
                 {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}, {5, 7, 1},
                  {6, 7, 1}},
                 1, 7);
}

// s=1 -> a=2 | b=3 | c=4 -> t=5.
inline WeightedDigraph triple_fan() {
  return digraph(5, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}, {3, 5, 1}, {4, 5, 1}}, 1, 5);
}

inline WeightedMultigraph multigraph(int n, std::vector<Edge> edges) {
  return WeightedMultigraph(n, std::move(edges));
}

inline WeightedMultigraph triangle(Weight w1 = 1, Weight w2 = 1, Weight w3 = 1) {
  return multigraph(3, {{1, 2, w1}, {2, 3, w2}, {1, 3, w3}});
}

inline WeightedMultigraph cycle_graph(int n, Weight w = 1) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1, w});
  return multigraph(n, std::move(edges));
}

inline WeightedMultigraph path_graph(int n, Weight w = 1) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, w});
  return multigraph(n, std::move(edges));
}

inline std::vector<Weight> edge_weights(const WeightedMultigraph& g) {
  std::vector<Weight> w(g.edge_count() + 1, 0);
  for (EdgeId e = 1; e <= g.edge_count(); ++e) w[e] = g.edge(e).weight;
  return w;
}

inline WeightedMultigraph with_weights(const WeightedMultigraph& g, const std::vector<Weight>& w) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = w[i + 1];
  return WeightedMultigraph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Digraph corpora

// Each ordered pair (u, v), u != v, becomes an arc with probability p.
inline WeightedDigraph random_digraph(std::mt19937_64& rng, int n, double p, Weight max_w) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> weight(1, max_w);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v, weight(rng)});
  return digraph(n, std::move(edges), 1, n);
}

inline bool reaches(const WeightedDigraph& g, VertexId from, VertexId to) {
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      VertexId v = g.edge(e).head;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen[to];
}

// Random digraphs with n in [2, max_n] and t reachable from s.
inline std::vector<WeightedDigraph> random_digraph_corpus(std::uint64_t seed, int count, int max_n,
                                                          Weight max_w) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, max_n);
  std::uniform_real_distribution<double> density(0.2, 0.6);
  std::vector<WeightedDigraph> out;
  while (static_cast<int>(out.size()) < count) {
    WeightedDigraph g = random_digraph(rng, size(rng), density(rng), max_w);
    if (reaches(g, 1, g.vertex_count())) out.push_back(std::move(g));
  }
  return out;
}

// Every arc set on vertices 1..n (s = 1, t = n) with t reachable, and every
// weighting of it with weights in 1..max_w.
inline std::vector<WeightedDigraph> all_digraphs(int n, Weight max_w) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<WeightedDigraph> out;
  const std::uint32_t masks = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<Edge> base;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) base.push_back({pairs[i].first, pairs[i].second, 1});
    if (!reaches(digraph(n, base, 1, n), 1, n)) continue;
    std::vector<Weight> w(base.size(), 1);
    while (true) {
      for (std::size_t i = 0; i < base.size(); ++i) base[i].weight = w[i];
      out.push_back(digraph(n, base, 1, n));
      std::size_t i = 0;
      while (i < w.size() && w[i] == max_w) w[i++] = 1;
      if (i == w.size()) break;
      ++w[i];
    }
  }
  return out;
}

// Layered DAG: `layers` layers of `width` vertices between s and t, with
// random arcs between consecutive layers and every vertex on some s-t path.
inline WeightedDigraph layered_dag(std::mt19937_64& rng, int layers, int width, int arcs) {
  const int n = layers * width + 2;
  auto id = [&](int layer, int i) { return 2 + layer * width + i; };
  std::vector<Edge> edges;
  for (int i = 0; i < width; ++i) edges.push_back({1, id(0, i), 1});
  for (int l = 0; l + 1 < layers; ++l)
    for (int i = 0; i < width; ++i) edges.push_back({id(l, i), id(l + 1, i), 1});
  for (int i = 0; i < width; ++i) edges.push_back({id(layers - 1, i), n, 1});
  std::uniform_int_distribution<int> layer(0, layers - 2);
  std::uniform_int_distribution<int> pick(0, width - 1);
  while (static_cast<int>(edges.size()) < arcs) {
    int l = layer(rng);
    edges.push_back({id(l, pick(rng)), id(l + 1, pick(rng)), 1});
  }
  return digraph(n, std::move(edges), 1, n);
}

// ---------------------------------------------------------------------------
// Multiway cuts

// Whether some terminal still reaches a different terminal once `cut`
// (local ids) is deleted.
inline bool terminals_connected(const WeightedDigraph& h, const std::vector<VertexId>& terminals,
                         std::uint32_t cut_mask) {
  for (VertexId from : terminals) {
    std::vector<bool> seen(h.vertex_count() + 1, false);
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (EdgeId e : h.out_edges(u)) {
        if (cut_mask >> (e - 1) & 1u) continue;
        VertexId v = h.edge(e).head;
        if (seen[v]) continue;
        if (v != from && std::find(terminals.begin(), terminals.end(), v) != terminals.end())
          return true;
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

inline int brute_multiway_cut(const WeightedDigraph& h, const std::vector<VertexId>& terminals) {
  const int m = h.edge_count();
  int best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size < best && !terminals_connected(h, terminals, mask)) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Multigraph corpora

// Connected multigraph with parallel edges and self-loops; a random spanning
// tree first, then extra edges anywhere.
inline WeightedMultigraph random_connected_multigraph(std::mt19937_64& rng, int n, int m,
                                                      Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> weight(lo, hi);
  std::uniform_int_distribution<int> vertex(1, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> earlier(0, i - 1);
    edges.push_back({order[earlier(rng)], order[i], weight(rng)});
  }
  while (static_cast<int>(edges.size()) < m) edges.push_back({vertex(rng), vertex(rng), weight(rng)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return multigraph(n, std::move(edges));
}

inline std::vector<WeightedMultigraph> random_multigraph_corpus(std::uint64_t seed, int count,
                                                                int max_n, int max_m) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedMultigraph> out;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    int m = std::uniform_int_distribution<int>(std::max(0, n - 1), max_m)(rng);
    out.push_back(random_connected_multigraph(rng, n, m, -1, 2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matroid fixtures

inline std::vector<std::vector<ElementId>> k_subsets(int n, int k) {
  std::vector<std::vector<ElementId>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<ElementId> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

struct NamedMatroid {
  std::string name;
  MatroidPtr matroid;
};

// Explicit matroids given by their basis lists.
inline std::vector<NamedMatroid> explicit_fixtures() {
  std::vector<NamedMatroid> out;
  auto add = [&](std::string name, int n, std::vector<std::vector<ElementId>> bases) {
    out.push_back({std::move(name), explicit_matroid(n, std::move(bases))});
  };
  add("two-bases", 3, {{1, 2}, {1, 3}});
  add("single-basis-with-loops", 3, {{1}});
  add("empty-basis", 2, {{}});
  add("free-3", 3, {{1, 2, 3}});
  add("U24", 4, k_subsets(4, 2));
  add("U13", 3, k_subsets(3, 1));
  add("U35", 5, k_subsets(5, 3));
  // Partition matroid: one from {1,2,3}, one from {4,5}.
  add("partition-3-2", 5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  // Two from {1,2,3}, one from {4,5,6}.
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& p : k_subsets(3, 2))
      for (int q = 4; q <= 6; ++q) b.push_back({p[0], p[1], q});
    add("partition-2of3-1of3", 6, b);
  }
  // Parallel class {1,2}, coloop 3, loop 4.
  add("parallel-coloop-loop", 4, {{1, 3}, {2, 3}});
  // Graphic matroid of K4 (edges 12,13,14,23,24,34).
  {
    const int ends[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(6, 3)) {
      std::vector<int> parent{0, 1, 2, 3, 4};
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      bool forest = true;
      for (int e : s) {
        int a = find(ends[e - 1][0]), c = find(ends[e - 1][1]);
        if (a == c) forest = false;
        parent[a] = c;
      }
      if (forest) b.push_back(s);
    }
    add("K4", 6, b);
  }
  // Fano plane: rank 3, bases are the triples that are not lines.
  {
    const std::set<std::vector<ElementId>> lines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                                 {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(7, 3))
      if (!lines.count(s)) b.push_back(s);
    add("Fano", 7, b);
  }
  // Non-Fano: drop the line {3,5,6}.
  {
    const std::set<std::vector<ElementId>> lines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7},
                                                 {2, 4, 6}, {2, 5, 7}, {3, 4, 7}};
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(7, 3))
      if (!lines.count(s)) b.push_back(s);
    add("non-Fano", 7, b);
  }
  // Rank-2 with a parallel pair: points {1,2} parallel, 3, 4 general.
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(4, 2))
      if (s != std::vector<ElementId>{1, 2}) b.push_back(s);
    add("rank2-parallel-pair", 4, b);
  }
  // Direct sum U(2,1) + U(3,2).
  {
    std::vector<std::vector<ElementId>> b;
    for (int a = 1; a <= 2; ++a)
      for (auto& s : k_subsets(3, 2)) b.push_back({a, s[0] + 2, s[1] + 2});
    add("U12+U23", 5, b);
  }
  // Rank 3 on 6 points with one three-point line {1,2,3}.
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(6, 3))
      if (s != std::vector<ElementId>{1, 2, 3}) b.push_back(s);
    add("rank3-one-line", 6, b);
  }
  // Rank 3 on 6 points with two disjoint three-point lines.
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(6, 3))
      if (s != std::vector<ElementId>{1, 2, 3} && s != std::vector<ElementId>{4, 5, 6})
        b.push_back(s);
    add("rank3-two-lines", 6, b);
  }
  // Cycle matroid of a 4-cycle with a doubled edge (edges 1,2 parallel).
  add("C4-doubled", 5, {{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5},
                        {3, 4, 5}});
  // Loops around a uniform matroid: U(3,2) on {2,3,4}, loops 1 and 5.
  add("loops-around-U23", 5, {{2, 3}, {2, 4}, {3, 4}});
  // Coloops only.
  add("all-coloops-2", 2, {{1, 2}});
  // Prism-like rank 3: lines {1,2,3} and {1,4,5} through a common point.
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(5, 3))
      if (s != std::vector<ElementId>{1, 2, 3} && s != std::vector<ElementId>{1, 4, 5})
        b.push_back(s);
    add("two-lines-meeting", 5, b);
  }
  // Rank 4 on 8 with circuit-hyperplane {1,2,3,4} relaxed away (V8-like).
  {
    std::vector<std::vector<ElementId>> b;
    for (auto& s : k_subsets(8, 4))
      if (s != std::vector<ElementId>{1, 2, 3, 4} && s != std::vector<ElementId>{5, 6, 7, 8})
        b.push_back(s);
    add("U48-minus-two-planes", 8, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent exhaustive checks over bitmasks (ground ids mapped to bits in
// ground() order).

inline std::vector<ElementId> from_mask(const std::vector<ElementId>& ground, std::uint64_t mask) {
  std::vector<ElementId> s;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1u) s.push_back(ground[i]);
  return s;
}

// indep[mask] for every subset of the ground set.
inline std::vector<bool> independence_table(const Matroid& m) {
  const auto& g = m.ground();
  std::vector<bool> t(std::size_t{1} << g.size());
  for (std::uint64_t mask = 0; mask < t.size(); ++mask) t[mask] = m.is_independent(from_mask(g, mask));
  return t;
}

// Empty set independent, downward closure, exchange. Returns a description
// of the first violation, or an empty string.
inline std::string axiom_violation(const std::vector<bool>& indep) {
  if (!indep[0]) return "empty set dependent";
  const std::uint64_t size = indep.size();
  for (std::uint64_t x = 0; x < size; ++x) {
    if (!indep[x]) continue;
    for (std::uint64_t bits = x; bits; bits &= bits - 1)
      if (!indep[x & ~(bits & -bits)]) return "not closed under removal";
  }
  for (std::uint64_t x = 0; x < size; ++x) {
    if (!indep[x]) continue;
    for (std::uint64_t y = 0; y < size; ++y) {
      if (!indep[y] || std::popcount(y) <= std::popcount(x)) continue;
      bool ok = false;
      for (std::uint64_t bits = y & ~x; bits && !ok; bits &= bits - 1)
        ok = indep[x | (bits & -bits)];
      if (!ok) return "exchange fails";
    }
  }
  return {};
}

// Minimal dependent masks.
inline std::vector<std::uint64_t> circuit_masks(const std::vector<bool>& indep) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < indep.size(); ++x) {
    if (indep[x]) continue;
    bool minimal = true;
    for (std::uint64_t bits = x; bits && minimal; bits &= bits - 1)
      minimal = indep[x & ~(bits & -bits)];
    if (minimal) out.push_back(x);
  }
  return out;
}

// Whether two oracles on the same ground set agree on every subset.
inline bool same_matroid(const Matroid& a, const Matroid& b) {
  return a.ground() == b.ground() && independence_table(a) == independence_table(b);
}

// M together with its dual, restrictions, contractions and a few nested
// compositions of those.
inline std::vector<MatroidPtr> compositions(const MatroidPtr& m) {
  std::vector<MatroidPtr> out{m, dual(m)};
  const auto& g = m->ground();
  std::vector<ElementId> half(g.begin(), g.begin() + g.size() / 2);
  std::vector<ElementId> odd;
  for (std::size_t i = 0; i < g.size(); i += 2) odd.push_back(g[i]);
  for (const auto& x : {half, odd}) {
    out.push_back(restrict_to(m, x));
    out.push_back(contract(m, x));
    out.push_back(dual(contract(m, x)));
    out.push_back(contract(dual(m), x));
    out.push_back(restrict_to(dual(m), x));
    out.push_back(dual(restrict_to(m, x)));
  }
  if (g.size() >= 2) {
    std::vector<ElementId> first{g.front()};
    std::vector<ElementId> last{g.back()};
    std::vector<ElementId> middle(g.begin() + 1, g.end() - 1);
    out.push_back(contract(contract(m, first), last));
    out.push_back(restrict_to(contract(m, first), middle));
    out.push_back(dual(contract(restrict_to(dual(m), std::vector<ElementId>(g.begin(), g.end() - 1)), first)));
  }
  return out;
}

}  // namespace forcing::testing
