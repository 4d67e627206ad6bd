#include "forcing/vc_reduction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "forcing/errors.hpp"
#include "forcing/sp_antiforcing.hpp"
#include "forcing/sp_dag.hpp"

namespace forcing {

namespace {

constexpr int kFirstGadgetRole = static_cast<int>(GadgetEdge::kTX);
constexpr int kGadgetRoleCount = static_cast<int>(GadgetEdge::kC4B) - kFirstGadgetRole + 1;

struct RoleSpec {
  GadgetVertex from;
  GadgetVertex to;
  Weight weight;
  const char* name;
};

constexpr std::array<RoleSpec, kGadgetRoleCount> kGadgetEdges{{
    {GadgetVertex::kT, GadgetVertex::kX, 1, "tx"},
    {GadgetVertex::kX, GadgetVertex::kY, 2, "xy"},
    {GadgetVertex::kY, GadgetVertex::kS, 1, "ys"},
    {GadgetVertex::kT, GadgetVertex::kA, 1, "ta"},
    {GadgetVertex::kW, GadgetVertex::kX, 1, "wx"},
    {GadgetVertex::kY, GadgetVertex::kZ, 1, "yz"},
    {GadgetVertex::kS, GadgetVertex::kB, 1, "sb"},
    {GadgetVertex::kA, GadgetVertex::kC1, 1, "ac1"},
    {GadgetVertex::kA, GadgetVertex::kC2, 1, "ac2"},
    {GadgetVertex::kA, GadgetVertex::kC3, 1, "ac3"},
    {GadgetVertex::kA, GadgetVertex::kC4, 1, "ac4"},
    {GadgetVertex::kC1, GadgetVertex::kB, 1, "c1b"},
    {GadgetVertex::kC2, GadgetVertex::kB, 1, "c2b"},
    {GadgetVertex::kC3, GadgetVertex::kB, 1, "c3b"},
    {GadgetVertex::kC4, GadgetVertex::kB, 1, "c4b"},
}};

constexpr std::array<const char*, kGadgetVertexCount> kVertexNames{
    "t", "x", "y", "s", "a", "w", "z", "b", "c1", "c2", "c3", "c4"};

}  // namespace

VertexId VcReductionInstance::vertex(GadgetVertex role, int gadget) const {
  if (gadget < 1 || gadget > n) throw InputError("gadget index out of range");
  return 3 + static_cast<int>(role) * n + (gadget - 1);
}

EdgeId VcReductionInstance::edge(GadgetEdge role, int gadget) const {
  if (role == GadgetEdge::kConnector) {
    if (gadget < 0 || gadget > n) throw InputError("connector index out of range");
    return gadget + 1;
  }
  int r = static_cast<int>(role) - kFirstGadgetRole;
  if (r < 0 || r >= kGadgetRoleCount) throw InputError("thick edges have no single id");
  if (gadget < 1 || gadget > n) throw InputError("gadget index out of range");
  return (n + 1) + r * n + gadget;
}

std::string VcReductionInstance::vertex_name(VertexId v) const {
  if (v == 1) return "s";
  if (v == 2) return "t";
  int offset = v - 3;
  return std::string(kVertexNames[offset / n]) + "_" + std::to_string(offset % n + 1);
}

std::string VcReductionInstance::edge_name(EdgeId id) const {
  const GadgetEdgeRole& r = edge_roles[id - 1];
  switch (r.role) {
    case GadgetEdge::kConnector:
      return "st_" + std::to_string(r.first);
    case GadgetEdge::kThickSW:
      return "thick_sw_" + std::to_string(r.first);
    case GadgetEdge::kThickZT:
      return "thick_zt_" + std::to_string(r.first);
    case GadgetEdge::kThickYX:
      return "thick_yx_" + std::to_string(r.first) + "_" + std::to_string(r.second);
    default:
      return std::string(kGadgetEdges[static_cast<int>(r.role) - kFirstGadgetRole].name) + "_" +
             std::to_string(r.first);
  }
}

VcReductionInstance vc_to_antiforcing_instance(const WeightedMultigraph& graph, int k) {
  const int n = graph.vertex_count();
  if (k < 0 || k > n) throw InputError("cover budget k must lie in 0..n");
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : graph.edges()) {
    if (e.tail == e.head) throw InputError("vertex-cover input must not contain self-loops");
    if (!pairs.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head)).second) {
      throw InputError("vertex-cover input must not contain parallel edges");
    }
  }

  VcReductionInstance instance{WeightedMultigraph(0, {}), n, k, 3 * n + k, 5 * Weight{n} + 1,
                               {}, {}};
  auto v = [&](GadgetVertex role, int i) { return instance.vertex(role, i); };
  std::vector<Edge> edges;
  auto add = [&](VertexId a, VertexId b, Weight w, GadgetEdgeRole role) {
    edges.push_back({a, b, w});
    instance.edge_roles.push_back(role);
    return static_cast<EdgeId>(edges.size());
  };

  for (int i = 0; i <= n; ++i) {
    VertexId from = i == 0 ? instance.source() : v(GadgetVertex::kS, i);
    VertexId to = i == n ? instance.target() : v(GadgetVertex::kT, i + 1);
    add(from, to, 1, {GadgetEdge::kConnector, i, 0});
  }
  for (int r = 0; r < kGadgetRoleCount; ++r) {
    const RoleSpec& spec = kGadgetEdges[r];
    for (int i = 1; i <= n; ++i) {
      add(v(spec.from, i), v(spec.to, i), spec.weight,
          {static_cast<GadgetEdge>(kFirstGadgetRole + r), i, 0});
    }
  }
  const int multiplicity = instance.big_n + 2;
  auto add_thick = [&](VertexId a, VertexId b, Weight w, GadgetEdgeRole role) {
    std::vector<EdgeId> group;
    for (int copy = 0; copy < multiplicity; ++copy) group.push_back(add(a, b, w, role));
    instance.thick_groups.push_back(std::move(group));
  };
  for (int i = 1; i <= n; ++i) {
    add_thick(instance.source(), v(GadgetVertex::kW, i), 5 * Weight{i - 1} + 1,
              {GadgetEdge::kThickSW, i, 0});
  }
  for (int i = 1; i <= n; ++i) {
    add_thick(v(GadgetVertex::kZ, i), instance.target(), 5 * Weight{n - i} + 1,
              {GadgetEdge::kThickZT, i, 0});
  }
  for (auto [i, j] : pairs) {
    add_thick(v(GadgetVertex::kY, i), v(GadgetVertex::kX, j), 5 * Weight{j - i - 1} + 3,
              {GadgetEdge::kThickYX, i, j});
  }

  instance.graph = WeightedMultigraph(2 + kGadgetVertexCount * n, std::move(edges),
                                      Terminals{instance.source(), instance.target()});
  return instance;
}

std::vector<EdgeId> vc_to_antiforcing_set(const VcReductionInstance& instance,
                                          std::span<const VertexId> cover) {
  std::vector<bool> covered(instance.n + 1, false);
  for (VertexId v : cover) {
    if (v < 1 || v > instance.n) throw InputError("cover vertex out of range");
    covered[v] = true;
  }
  const int cover_size = static_cast<int>(std::count(covered.begin(), covered.end(), true));
  if (cover_size > instance.k) throw InputError("cover is larger than k");
  for (const auto& role : instance.edge_roles) {
    if (role.role == GadgetEdge::kThickYX && !covered[role.first] && !covered[role.second]) {
      throw InputError("not a vertex cover: edge {" + std::to_string(role.first) + "," +
                       std::to_string(role.second) + "} is uncovered");
    }
  }

  std::vector<EdgeId> set;
  for (int i = 1; i <= instance.n; ++i) {
    if (covered[i]) {
      for (auto role : {GadgetEdge::kXY, GadgetEdge::kAC2, GadgetEdge::kAC3, GadgetEdge::kAC4}) {
        set.push_back(instance.edge(role, i));
      }
    } else {
      for (auto role : {GadgetEdge::kTA, GadgetEdge::kWX, GadgetEdge::kYZ}) {
        set.push_back(instance.edge(role, i));
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

std::vector<VertexId> antiforcing_to_vc(const VcReductionInstance& instance,
                                        std::span<const EdgeId> set) {
  std::set<EdgeId> distinct(set.begin(), set.end());
  if (static_cast<int>(distinct.size()) > instance.big_n) {
    throw InputError("anti-forcing set is larger than N");
  }
  auto dag = build_sp_dag(instance.graph);
  auto check = is_antiforcing_set(dag, set);
  if (!check.valid) throw InputError("edge set is not an anti-forcing set of the gadget graph");

  std::vector<bool> on_path(instance.graph.vertex_count() + 1, false);
  for (EdgeId id : check.witness) {
    on_path[dag.edge(id).tail] = true;
    on_path[dag.edge(id).head] = true;
  }
  std::vector<VertexId> cover;
  for (int i = 1; i <= instance.n; ++i) {
    if (on_path[instance.vertex(GadgetVertex::kA, i)]) cover.push_back(i);
  }
  return cover;
}

SimpleGadget make_simple_unweighted(const VcReductionInstance& instance) {
  const WeightedMultigraph& h = instance.graph;
  int vertex_count = h.vertex_count();
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    const Edge& e = h.edge(id);
    const Weight length = 2 * e.weight;
    VertexId previous = e.tail;
    for (Weight step = 1; step <= length; ++step) {
      VertexId next = step == length ? e.head : ++vertex_count;
      edges.push_back({previous, next, 1});
      origin.push_back(id);
      previous = next;
    }
  }
  return {WeightedMultigraph(vertex_count, std::move(edges), h.terminals()), std::move(origin)};
}

}  // namespace forcing
