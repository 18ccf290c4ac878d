#include "stablewelfare/closure.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "stablewelfare/error.h"
#include "stablewelfare/flow.h"

namespace stablewelfare {
namespace {

void RejectCycles(int node_count, std::span<const std::pair<int, int>> edges) {
  std::vector<int> indegree(static_cast<size_t>(node_count), 0);
  std::vector<std::vector<int>> out(static_cast<size_t>(node_count));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    out[u].push_back(v);
    ++indegree[v];
  }
  std::vector<int> ready;
  for (int v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++visited;
    for (int v : out[u]) {
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  if (visited != node_count) {
    throw Error(ErrorCode::kCyclicGraph, "precedence graph has a cycle");
  }
}

}  // namespace

bool IsClosed(std::span<const std::pair<int, int>> edges,
              const std::vector<int>& nodes, int node_count) {
  std::vector<bool> in(static_cast<size_t>(node_count), false);
  for (int v : nodes) in[v] = true;
  return std::all_of(edges.begin(), edges.end(),
                     [&](const auto& e) { return !in[e.second] || in[e.first]; });
}

ClosedSubset MinWeightClosedSubset(int node_count, std::span<const double> weights,
                                   std::span<const std::pair<int, int>> edges) {
  if (static_cast<int>(weights.size()) != node_count) {
    throw Error(ErrorCode::kDimensionMismatch, "one weight per node required");
  }
  double scale = 1.0;
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::kNonFinite, "closure weights must be finite");
    }
    scale = std::max(scale, std::abs(w));
  }
  RejectCycles(node_count, edges);
  if (node_count == 0) return {};

  const double zero = 1e-9 * scale;
  const int source = node_count;
  const int sink = node_count + 1;
  FlowNetwork net(node_count + 2, source, sink);
  for (int v = 0; v < node_count; ++v) {
    if (weights[v] > zero) net.AddArc(source, v, weights[v]);
    if (weights[v] < -zero) net.AddArc(v, sink, -weights[v]);
  }
  for (const auto& [u, v] : edges) net.AddArc(u, v, kInfiniteCapacity);

  const MinCutResult cut = MaxFlowMinCut(net);
  ClosedSubset best;
  for (int v = 0; v < node_count; ++v) {
    if (cut.sink_side[v]) {
      best.nodes.push_back(v);
      best.weight += weights[v];
    }
  }
  return best;
}

}  // namespace stablewelfare
