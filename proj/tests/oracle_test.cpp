#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "forcing/errors.hpp"
#include "forcing/oracle.hpp"

using namespace forcing;
using namespace forcing::testing;

namespace {

// Distinct k-subsets of {1..n}, so no member contains another.
SolutionFamily random_family(std::mt19937_64& rng, int n, int k, int count) {
  auto all = k_subsets(n, k);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), count));
  std::sort(all.begin(), all.end());
  return all;
}

Solution minus(const Solution& a, const Solution& b) {
  Solution out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("enumerate_st_paths examples") {
  CHECK(enumerate_st_paths(build_sp_dag(diamond())).size() == 2);
  CHECK(enumerate_st_paths(build_sp_dag(chain())).size() == 1);
  auto paths = enumerate_st_paths(build_sp_dag(double_diamond()));
  CHECK(paths.size() == 4);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
  CHECK(paths.front() == std::vector<EdgeId>{1, 3, 5, 7});
}

TEST_CASE("enumerate_bases examples") {
  CHECK(enumerate_bases(*graphic_matroid(triangle())).size() == 3);
  auto u42 = enumerate_bases(*uniform_matroid(4, 2));
  CHECK(u42.size() == 6);
  auto expected = k_subsets(4, 2);
  std::sort(expected.begin(), expected.end());
  CHECK(u42 == expected);
}

TEST_CASE("weight filters") {
  SolutionFamily bases{{1, 2}, {1, 3}, {2, 3}};
  std::vector<Weight> w{0, 1, 1, 2};
  CHECK(min_weight_bases(bases, w) == SolutionFamily{{1, 2}});
  CHECK(max_weight_bases(bases, w) == SolutionFamily{{1, 3}, {2, 3}});
}

TEST_CASE("brute force examples") {
  SolutionFamily one{{1, 4}};
  auto r = brute_min_forcing(one);
  CHECK(r.size == 0);
  CHECK(r.set.empty());
  CHECK(r.witness == Solution{1, 4});

  auto trees = enumerate_bases(*graphic_matroid(triangle()));
  CHECK(brute_min_forcing(trees).size == 2);

  SolutionFamily diamond_paths{{1, 3}, {2, 4}};
  auto a = brute_min_antiforcing(diamond_paths);
  CHECK(a.size == 1);
  CHECK(a.set == Solution{1});
  CHECK(a.witness == Solution{2, 4});
}

TEST_CASE("per-member searches and predicates") {
  SolutionFamily trees{{1, 2}, {1, 3}, {2, 3}};
  auto f = brute_min_forcing_for(trees, 1);
  CHECK(f.size == 2);
  CHECK(f.set == Solution{1, 3});
  auto a = brute_min_antiforcing_for(trees, 2);
  CHECK(a.set == Solution{1});
  CHECK(is_forcing_for_family(trees, Solution{1, 2}));
  CHECK_FALSE(is_forcing_for_family(trees, Solution{1}));
  CHECK(is_antiforcing_for_family(trees, Solution{3}));
  CHECK_FALSE(is_antiforcing_for_family(trees, Solution{}));
  CHECK_THROWS_AS(brute_min_forcing_for(trees, 3), InputError);
  CHECK_THROWS_AS(brute_min_forcing(SolutionFamily{}), InputError);
}

TEST_CASE("singleton families always give size 0") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    auto fam = random_family(rng, 6, 3, 1);
    CHECK(brute_min_forcing(fam).size == 0);
    CHECK(brute_min_antiforcing(fam).size == 0);
  }
}

TEST_CASE("budgets are enforced before enumeration") {
  EnumerationBudget tiny;
  tiny.max_vertices = 3;
  CHECK_THROWS_AS(enumerate_st_paths(build_sp_dag(diamond()), tiny), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_shortest_paths(diamond(), tiny), ResourceLimitError);
  tiny.max_ground = 3;
  CHECK_THROWS_AS(enumerate_bases(*uniform_matroid(4, 2), tiny), ResourceLimitError);
  EnumerationBudget few;
  few.max_solutions = 3;
  CHECK_THROWS_AS(brute_min_forcing(k_subsets(5, 2), few), ResourceLimitError);
  EnumerationBudget narrow;
  narrow.max_edges = 4;
  CHECK_THROWS_AS(brute_min_antiforcing(k_subsets(5, 2), narrow), ResourceLimitError);
}

TEST_CASE("property: brute minima equal independent hitting-set minima") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 200; ++round) {
    int n = std::uniform_int_distribution<int>(2, 7)(rng);
    int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    auto fam = random_family(rng, n, k, std::uniform_int_distribution<int>(1, 8)(rng));
    int best_anti = 1 << 20, best_force = 1 << 20;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      SolutionFamily anti_sets, force_sets;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (j == i) continue;
        anti_sets.push_back(minus(fam[j], fam[i]));
        force_sets.push_back(minus(fam[i], fam[j]));
      }
      int anti = min_hitting_set_size(anti_sets);
      int force = min_hitting_set_size(force_sets);
      CHECK(brute_min_antiforcing_for(fam, i).size == anti);
      CHECK(brute_min_forcing_for(fam, i).size == force);
      best_anti = std::min(best_anti, anti);
      best_force = std::min(best_force, force);
    }
    CHECK(brute_min_antiforcing(fam).size == best_anti);
    CHECK(brute_min_forcing(fam).size == best_force);
  }
}

TEST_CASE("property: reported sets are the lexicographically least optima") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 100; ++round) {
    auto fam = random_family(rng, 6, 3, std::uniform_int_distribution<int>(2, 8)(rng));
    auto r = brute_min_antiforcing(fam);
    std::set<Solution> optima;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      if (std::popcount(mask) != r.size) continue;
      Solution s;
      for (int i = 0; i < 6; ++i)
        if (mask >> i & 1u) s.push_back(i + 1);
      if (is_antiforcing_for_family(fam, s)) optima.insert(s);
    }
    REQUIRE_FALSE(optima.empty());
    CHECK(r.set == *optima.begin());
    auto again = brute_min_antiforcing(fam);
    CHECK(again.set == r.set);
    CHECK(again.witness == r.witness);
  }
}
