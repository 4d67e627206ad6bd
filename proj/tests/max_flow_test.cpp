#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "forcing/errors.hpp"
#include "forcing/max_flow.hpp"

using namespace forcing;

namespace {

bool connected_without(const FlowNetwork& net, const std::vector<std::pair<int, int>>& arcs,
                       const std::vector<int>& cut, int s, int t) {
  std::vector<bool> removed(arcs.size(), false);
  for (int a : cut) removed[a] = true;
  std::vector<bool> seen(net.node_count(), false);
  std::vector<int> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < arcs.size(); ++a)
      if (!removed[a] && arcs[a].first == u && !seen[arcs[a].second]) {
        seen[arcs[a].second] = true;
        stack.push_back(arcs[a].second);
      }
  }
  return seen[t];
}

}  // namespace

TEST_CASE("two disjoint paths") {
  FlowNetwork net(4, 100);
  net.add_arc(0, 1, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(2, 3, 1);
  CHECK(net.max_flow_min_cut(0, 3).value == 2);
}

TEST_CASE("single edge") {
  FlowNetwork net(2, 100);
  net.add_arc(0, 1, 1);
  auto cut = net.max_flow_min_cut(0, 1);
  CHECK(cut.value == 1);
  CHECK(cut.arcs == std::vector<int>{0});
  CHECK(cut.source_side[0]);
  CHECK_FALSE(cut.source_side[1]);
}

TEST_CASE("diamond of unit edges") {
  FlowNetwork net(4, 100);
  net.add_arc(0, 1, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 1);
  auto cut = net.max_flow_min_cut(0, 3);
  CHECK(cut.value == 2);
  // Oracle: smallest arc subset disconnecting 0 from 3, by enumeration.
  std::vector<std::pair<int, int>> arcs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  int best = 5;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> c;
    for (int a = 0; a < 4; ++a)
      if (mask >> a & 1) c.push_back(a);
    if (!connected_without(net, arcs, c, 0, 3)) best = std::min<int>(best, c.size());
  }
  CHECK(best == 2);
}

TEST_CASE("infinite arcs are never cut") {
  FlowNetwork net(3, 10);
  net.add_arc(0, 1, 10);
  net.add_arc(1, 2, 1);
  auto cut = net.max_flow_min_cut(0, 2);
  CHECK(cut.arcs == std::vector<int>{1});

  FlowNetwork bad(3, 10);
  bad.add_arc(0, 1, 10);
  bad.add_arc(1, 2, 10);
  CHECK_THROWS_AS(bad.max_flow_min_cut(0, 2), InputError);
}

TEST_CASE("property: cut value equals the brute-force minimum on random unit networks") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int m = std::uniform_int_distribution<int>(0, 11)(rng);
    std::uniform_int_distribution<int> node(0, n - 1);
    FlowNetwork net(n, m + 1);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i) {
      int u = node(rng), v = node(rng);
      arcs.emplace_back(u, v);
      net.add_arc(u, v, 1);
    }
    auto cut = net.max_flow_min_cut(0, n - 1);
    CHECK(static_cast<std::int64_t>(cut.arcs.size()) == cut.value);
    CHECK_FALSE(connected_without(net, arcs, cut.arcs, 0, n - 1));
    int best = m + 1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> c;
      for (int a = 0; a < m; ++a)
        if (mask >> a & 1u) c.push_back(a);
      if (static_cast<int>(c.size()) < best && !connected_without(net, arcs, c, 0, n - 1))
        best = static_cast<int>(c.size());
    }
    CHECK(cut.value == best);
  }
}
