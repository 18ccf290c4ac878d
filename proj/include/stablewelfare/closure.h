#pragma once

#include <span>
#include <utility>
#include <vector>

namespace stablewelfare {

// A predecessor-closed node set: if v is in the set and (u, v) is an edge,
// u is in the set too.
struct ClosedSubset {
  std::vector<int> nodes;  // ascending
  double weight = 0.0;
};

// Minimum-weight closed subset of a DAG via an s-t minimum cut: s -> v with
// capacity w(v) for w(v) > 0, v -> t with capacity -w(v) for w(v) < 0, and
// every edge at infinite capacity. The sink side of the cut is closed and
// its weight equals the cut capacity minus the total negative weight.
//
// Among optimal subsets the inclusion-minimal one is returned, so zero-weight
// nodes only appear when a member needs them. Weights within a round-off
// tolerance of zero count as zero. Throws Error(kCyclicGraph) on a cycle.
ClosedSubset MinWeightClosedSubset(int node_count, std::span<const double> weights,
                                   std::span<const std::pair<int, int>> edges);

bool IsClosed(std::span<const std::pair<int, int>> edges,
              const std::vector<int>& nodes, int node_count);

}  // namespace stablewelfare
