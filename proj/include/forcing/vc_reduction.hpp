#pragma once

#include <span>
#include <string>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Vertex roles inside one vertex gadget H_i. The path t-x-y-s runs through
// the gadget; a, w, z, b hang off t, x, y, s; c1..c4 are the midpoints of
// four a-b paths of length 2.
enum class GadgetVertex { kT, kX, kY, kS, kA, kW, kZ, kB, kC1, kC2, kC3, kC4 };
inline constexpr int kGadgetVertexCount = 12;

// Edge roles. kConnector joins s_i to t_{i+1} (s_0 = s, t_{n+1} = t); the
// three kThick* roles are groups of N + 2 parallel edges.
enum class GadgetEdge {
  kConnector,
  kTX, kXY, kYS, kTA, kWX, kYZ, kSB,
  kAC1, kAC2, kAC3, kAC4, kC1B, kC2B, kC3B, kC4B,
  kThickSW, kThickZT, kThickYX
};

struct GadgetEdgeRole {
  GadgetEdge role;
  int first = 0;   // gadget index (connector: i of s_i; thick y-x: i)
  int second = 0;  // thick y-x only: j
};

/// Gadget graph for a vertex-cover instance (G, k): G has a vertex cover of
/// size <= k iff the gadget has an anti-forcing set of size <= N = 3n + k
/// for its shortest s-t paths, all of which have length 5n + 1.
///
/// Ids are role-major: vertex s = 1, t = 2, then for each GadgetVertex role
/// r (in enum order) and gadget i = 1..n the vertex 3 + r*n + (i - 1).
/// Edges: the n + 1 connectors, then each gadget edge role in enum order for
/// i = 1..n, then thick s-w_i groups, thick z_i-t groups, and thick y_i-x_j
/// groups in ascending (i, j) order.
struct VcReductionInstance {
  WeightedMultigraph graph;
  int n = 0;
  int k = 0;
  int big_n = 0;  // N = 3n + k
  Weight shortest_path_length = 0;
  std::vector<GadgetEdgeRole> edge_roles;  // indexed by edge id - 1
  std::vector<std::vector<EdgeId>> thick_groups;

  VertexId vertex(GadgetVertex role, int gadget) const;
  VertexId source() const { return 1; }
  VertexId target() const { return 2; }
  /// Id of a non-thick gadget edge (connectors use gadget = i of s_i).
  EdgeId edge(GadgetEdge role, int gadget) const;
  std::string vertex_name(VertexId v) const;
  std::string edge_name(EdgeId id) const;
};

/// `graph` must be simple (no loops, no parallel edges); weights ignored.
VcReductionInstance vc_to_antiforcing_instance(const WeightedMultigraph& graph, int k);

/// Only-if direction: builds F from a vertex cover with at most k vertices.
/// Covered i contribute xy, ac2, ac3, ac4; others contribute ta, wx, yz.
std::vector<EdgeId> vc_to_antiforcing_set(const VcReductionInstance& instance,
                                          std::span<const VertexId> cover);

/// If direction: reads a vertex cover off the unique shortest path that
/// avoids F (the gadgets it crosses through a-c-b). F must be an anti-forcing
/// set with |F| <= N.
std::vector<VertexId> antiforcing_to_vc(const VcReductionInstance& instance,
                                        std::span<const EdgeId> set);

/// Unit-weight simple version: an edge of weight q becomes a path of 2q
/// unit edges. origin[i] is the gadget edge that simple edge i + 1 came from.
struct SimpleGadget {
  WeightedMultigraph graph;
  std::vector<EdgeId> origin;
};

SimpleGadget make_simple_unweighted(const VcReductionInstance& instance);

}  // namespace forcing
