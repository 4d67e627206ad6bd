#include "forcing/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

std::vector<ElementId> iota_ids(int n) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  return ids;
}

std::vector<ElementId> sorted_unique(std::span<const ElementId> ids) {
  std::vector<ElementId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(const WeightedMultigraph& graph)
      : Matroid(iota_ids(graph.edge_count()), MatroidKind::kGraphic),
        vertex_count_(graph.vertex_count()),
        edges_(graph.edges().begin(), graph.edges().end()) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    std::vector<VertexId> parent(vertex_count_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (ElementId id : subset) {
      VertexId a = find(edges_[id - 1].tail), b = find(edges_[id - 1].head);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int r) : Matroid(iota_ids(n), MatroidKind::kUniform), rank_(r) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    return static_cast<int>(subset.size()) <= rank_;
  }

 private:
  int rank_;
};

class ExplicitMatroid final : public Matroid {
 public:
  ExplicitMatroid(int n, std::vector<std::uint64_t> bases)
      : Matroid(iota_ids(n), MatroidKind::kExplicit), bases_(std::move(bases)) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    std::uint64_t mask = 0;
    for (ElementId e : subset) mask |= std::uint64_t{1} << (e - 1);
    return std::any_of(bases_.begin(), bases_.end(),
                       [&](std::uint64_t b) { return (mask & ~b) == 0; });
  }

 private:
  std::vector<std::uint64_t> bases_;
};

class DualMatroid final : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr base)
      : Matroid(base->ground(), MatroidKind::kDual),
        base_(std::move(base)),
        base_rank_(matroid_rank(*base_)) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    std::vector<bool> excluded(ground().empty() ? 1 : ground().back() + 1, false);
    for (ElementId e : subset) excluded[e] = true;
    std::vector<ElementId> rest;
    for (ElementId e : ground()) {
      if (!excluded[e]) rest.push_back(e);
    }
    return static_cast<int>(greedy_basis(*base_, rest).size()) == base_rank_;
  }

 private:
  MatroidPtr base_;
  int base_rank_;
};

class Restriction final : public Matroid {
 public:
  Restriction(MatroidPtr base, std::vector<ElementId> subset)
      : Matroid(std::move(subset), MatroidKind::kRestriction), base_(std::move(base)) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    return base_->is_independent(subset);
  }

 private:
  MatroidPtr base_;
};

class Contraction final : public Matroid {
 public:
  Contraction(MatroidPtr base, std::vector<ElementId> rest, std::vector<ElementId> fixed_basis)
      : Matroid(std::move(rest), MatroidKind::kContraction),
        base_(std::move(base)),
        fixed_basis_(std::move(fixed_basis)) {}

 protected:
  bool independent(std::span<const ElementId> subset) const override {
    std::vector<ElementId> joined(fixed_basis_);
    joined.insert(joined.end(), subset.begin(), subset.end());
    return base_->is_independent(joined);
  }

 private:
  MatroidPtr base_;
  std::vector<ElementId> fixed_basis_;
};

std::vector<ElementId> checked_subset(const Matroid& matroid, std::span<const ElementId> subset) {
  auto ids = sorted_unique(subset);
  for (ElementId e : ids) {
    if (!matroid.contains(e)) {
      throw InputError("element " + std::to_string(e) + " is not in the ground set");
    }
  }
  return ids;
}

}  // namespace

Matroid::Matroid(std::vector<ElementId> ground, MatroidKind kind)
    : ground_(std::move(ground)), kind_(kind) {
  member_.assign(ground_.empty() ? 1 : ground_.back() + 1, false);
  for (ElementId e : ground_) member_[e] = true;
}

bool Matroid::is_independent(std::span<const ElementId> subset) const {
  for (ElementId e : subset) {
    if (!contains(e)) throw InputError("element " + std::to_string(e) + " is not in the ground set");
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return independent(subset);
}

MatroidPtr graphic_matroid(const WeightedMultigraph& graph) {
  return std::make_shared<GraphicMatroid>(graph);
}

MatroidPtr uniform_matroid(int n, int r) {
  if (n < 0 || r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  return std::make_shared<UniformMatroid>(n, r);
}

MatroidPtr explicit_matroid(int ground_size, std::vector<std::vector<ElementId>> bases) {
  if (ground_size < 0 || ground_size > 64) throw InputError("explicit matroids support 0..64 elements");
  if (bases.empty()) throw InputError("a matroid has at least one basis");
  std::vector<std::uint64_t> masks;
  std::unordered_set<std::uint64_t> known;
  for (const auto& basis : bases) {
    std::uint64_t mask = 0;
    for (ElementId e : basis) {
      if (e < 1 || e > ground_size) throw InputError("basis element out of range");
      if (mask & (std::uint64_t{1} << (e - 1))) throw InputError("repeated element in a basis");
      mask |= std::uint64_t{1} << (e - 1);
    }
    if (basis.size() != bases.front().size()) throw InputError("bases have unequal cardinality");
    if (known.insert(mask).second) masks.push_back(mask);
  }
  for (std::uint64_t b1 : masks) {
    for (std::uint64_t b2 : masks) {
      for (std::uint64_t only1 = b1 & ~b2; only1 != 0; only1 &= only1 - 1) {
        std::uint64_t x = only1 & -only1;
        bool exchanged = false;
        for (std::uint64_t only2 = b2 & ~b1; only2 != 0 && !exchanged; only2 &= only2 - 1) {
          std::uint64_t y = only2 & -only2;
          exchanged = known.count((b1 & ~x) | y) > 0;
        }
        if (!exchanged) throw InputError("listed bases violate the basis-exchange axiom");
      }
    }
  }
  return std::make_shared<ExplicitMatroid>(ground_size, std::move(masks));
}

MatroidPtr dual(MatroidPtr matroid) { return std::make_shared<DualMatroid>(std::move(matroid)); }

MatroidPtr restrict_to(MatroidPtr matroid, std::span<const ElementId> subset) {
  auto ids = checked_subset(*matroid, subset);
  return std::make_shared<Restriction>(std::move(matroid), std::move(ids));
}

MatroidPtr contract(MatroidPtr matroid, std::span<const ElementId> subset,
                    std::optional<std::vector<ElementId>> basis_of_subset) {
  auto ids = checked_subset(*matroid, subset);
  std::vector<ElementId> basis;
  if (basis_of_subset) {
    basis = sorted_unique(*basis_of_subset);
    auto restricted = restrict_to(matroid, ids);
    for (ElementId e : basis) {
      if (!restricted->contains(e)) throw InputError("fixed basis is not inside the contracted set");
    }
    if (!is_basis(*restricted, basis)) throw InputError("fixed set is not a basis of M | X");
  } else {
    basis = greedy_basis(*matroid, ids);
  }
  std::vector<ElementId> rest;
  std::set_difference(matroid->ground().begin(), matroid->ground().end(), ids.begin(), ids.end(),
                      std::back_inserter(rest));
  return std::make_shared<Contraction>(std::move(matroid), std::move(rest), std::move(basis));
}

std::vector<ElementId> greedy_basis(const Matroid& matroid, std::span<const ElementId> order) {
  std::vector<ElementId> basis;
  for (ElementId e : order) {
    basis.push_back(e);
    if (!matroid.is_independent(basis)) basis.pop_back();
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<ElementId> greedy_basis(const Matroid& matroid) {
  return greedy_basis(matroid, matroid.ground());
}

int matroid_rank(const Matroid& matroid) {
  return static_cast<int>(greedy_basis(matroid).size());
}

bool is_loop(const Matroid& matroid, ElementId e) {
  const ElementId single[] = {e};
  return !matroid.is_independent(single);
}

bool is_basis(const Matroid& matroid, std::span<const ElementId> set) {
  auto ids = sorted_unique(set);
  if (ids.size() != set.size() || !matroid.is_independent(ids)) return false;
  std::vector<ElementId> grown(ids);
  for (ElementId e : matroid.ground()) {
    if (std::binary_search(ids.begin(), ids.end(), e)) continue;
    grown.push_back(e);
    bool independent = matroid.is_independent(grown);
    grown.pop_back();
    if (independent) return false;
  }
  return true;
}

std::vector<ElementId> fundamental_circuit(const Matroid& matroid, std::span<const ElementId> basis,
                                           ElementId e) {
  if (!matroid.contains(e)) throw InputError("element is not in the ground set");
  if (std::find(basis.begin(), basis.end(), e) != basis.end()) {
    throw InputError("element already belongs to the basis");
  }
  if (!is_basis(matroid, basis)) throw InputError("given set is not a basis");
  std::vector<ElementId> circuit{e};
  std::vector<ElementId> swapped;
  for (ElementId f : basis) {
    swapped.clear();
    for (ElementId g : basis) {
      if (g != f) swapped.push_back(g);
    }
    swapped.push_back(e);
    if (matroid.is_independent(swapped)) circuit.push_back(f);
  }
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace forcing
