#include "forcing/max_flow.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "forcing/errors.hpp"

namespace forcing {

FlowNetwork::FlowNetwork(int node_count, std::int64_t infinity)
    : infinity_(infinity), adjacency_(node_count) {}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw InputError("flow arc endpoint out of range");
  }
  if (capacity < 0) throw InputError("negative capacity");
  int index = arc_count();
  adjacency_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, std::min(capacity, infinity_)});
  adjacency_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
  return index;
}

FlowNetwork::Cut FlowNetwork::max_flow_min_cut(int source, int sink) const {
  if (source == sink) throw InputError("flow source equals sink");
  std::vector<std::int64_t> residual(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) residual[i] = arcs_[i].capacity;

  Cut cut;
  std::vector<int> parent_arc(node_count());
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    parent_arc[source] = -2;
    while (!queue.empty() && parent_arc[sink] == -1) {
      int u = queue.front();
      queue.pop();
      for (int a : adjacency_[u]) {
        int v = arcs_[a].to;
        if (residual[a] > 0 && parent_arc[v] == -1) {
          parent_arc[v] = a;
          queue.push(v);
        }
      }
    }
    if (parent_arc[sink] == -1) break;

    std::int64_t bottleneck = infinity_;
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      bottleneck = std::min(bottleneck, residual[parent_arc[v]]);
    }
    if (bottleneck >= infinity_) {
      throw InputError("source and sink are joined by a path of uncuttable arcs");
    }
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      residual[parent_arc[v]] -= bottleneck;
      residual[parent_arc[v] ^ 1] += bottleneck;
    }
    cut.value += bottleneck;
    if (cut.value >= infinity_) {
      throw InputError("minimum cut is not finite");
    }
  }

  cut.source_side.assign(node_count(), false);
  for (int v = 0; v < node_count(); ++v) cut.source_side[v] = parent_arc[v] != -1;
  for (int i = 0; i < arc_count(); ++i) {
    const Arc& forward = arcs_[2 * i];
    int from = arcs_[2 * i + 1].to;
    if (cut.source_side[from] && !cut.source_side[forward.to] && forward.capacity > 0) {
      cut.arcs.push_back(i);
    }
  }
  return cut;
}

}  // namespace forcing
