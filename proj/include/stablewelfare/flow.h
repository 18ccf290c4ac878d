#pragma once

#include <limits>
#include <vector>

namespace stablewelfare {

inline constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

// Directed s-t network with non-negative capacities. Arcs may carry
// kInfiniteCapacity as long as no s-t path consists of infinite arcs only.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  // Throws Error(kInvalidNetwork) for arcs into the source, out of the sink,
  // self-loops, bad endpoints, or negative/NaN capacities.
  void AddArc(int from, int to, double capacity);

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  struct Arc {
    int from;
    int to;
    double capacity;
  };
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct MinCutResult {
  double flow_value = 0.0;
  // Nodes reachable from the source in the final residual network (the
  // smallest source side of a minimum cut).
  std::vector<bool> source_side;
  // Nodes that can reach the sink in the final residual network (the
  // smallest sink side of a minimum cut).
  std::vector<bool> sink_side;
  // Capacity of the arcs leaving `source_side`; equals flow_value up to
  // round-off.
  double cut_capacity = 0.0;
};

// Dinic's algorithm. Residual capacities at or below a tolerance proportional
// to the largest finite capacity are treated as saturated.
MinCutResult MaxFlowMinCut(const FlowNetwork& network);

}  // namespace stablewelfare
