#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

using ElementId = int;

enum class MatroidKind { kGraphic, kUniform, kExplicit, kDual, kRestriction, kContraction };

/// Matroid given by an independence oracle over a ground set of 1-based
/// element ids. Immutable; queries are safe from several threads.
class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  /// Ascending element ids.
  const std::vector<ElementId>& ground() const { return ground_; }
  bool contains(ElementId e) const {
    return e >= 0 && e < static_cast<ElementId>(member_.size()) && member_[e];
  }
  MatroidKind kind() const { return kind_; }

  /// `subset` holds distinct elements. Throws InputError for elements outside
  /// the ground set.
  bool is_independent(std::span<const ElementId> subset) const;

  /// Number of is_independent calls answered by this object.
  std::int64_t oracle_calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  Matroid(std::vector<ElementId> ground, MatroidKind kind);
  virtual bool independent(std::span<const ElementId> subset) const = 0;

 private:
  std::vector<ElementId> ground_;
  std::vector<bool> member_;
  MatroidKind kind_;
  mutable std::atomic<std::int64_t> calls_{0};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Edge sets that form forests; self-loops are loops of the matroid.
MatroidPtr graphic_matroid(const WeightedMultigraph& graph);
/// U(n, r): sets of at most r elements of {1..n}.
MatroidPtr uniform_matroid(int n, int r);
/// Independent sets are the subsets of listed bases. Rejects lists with
/// unequal basis sizes or that violate basis exchange. Ground size <= 64.
MatroidPtr explicit_matroid(int ground_size, std::vector<std::vector<ElementId>> bases);
/// X is independent iff some basis of M avoids X.
MatroidPtr dual(MatroidPtr matroid);
/// M | X.
MatroidPtr restrict_to(MatroidPtr matroid, std::span<const ElementId> subset);
/// M / X. Fixes one basis B_X of M | X (the greedy one in ascending order
/// unless `basis_of_subset` is given) and answers I by testing B_X u I.
MatroidPtr contract(MatroidPtr matroid, std::span<const ElementId> subset,
                    std::optional<std::vector<ElementId>> basis_of_subset = std::nullopt);

/// Scans `order` and keeps every element that preserves independence. The
/// result is sorted.
std::vector<ElementId> greedy_basis(const Matroid& matroid, std::span<const ElementId> order);
/// Greedy in ascending id order.
std::vector<ElementId> greedy_basis(const Matroid& matroid);
int matroid_rank(const Matroid& matroid);
bool is_loop(const Matroid& matroid, ElementId e);
bool is_basis(const Matroid& matroid, std::span<const ElementId> set);

/// The unique circuit in B + e: e together with every f in B for which
/// B + e - f is again a basis.
std::vector<ElementId> fundamental_circuit(const Matroid& matroid, std::span<const ElementId> basis,
                                           ElementId e);

}  // namespace forcing
