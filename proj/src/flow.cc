#include "stablewelfare/flow.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "stablewelfare/error.h"

namespace stablewelfare {
namespace {

class Dinic {
 public:
  Dinic(const FlowNetwork& net, double eps)
      : n_(net.node_count()), s_(net.source()), t_(net.sink()), eps_(eps),
        head_(static_cast<size_t>(n_), -1) {
    for (const auto& a : net.arcs()) {
      Push(a.from, a.to, a.capacity);
      Push(a.to, a.from, 0.0);
    }
  }

  double Run() {
    double total = 0.0;
    while (BuildLevels()) {
      iter_ = head_;
      for (;;) {
        const double pushed = Augment(s_, kInfiniteCapacity);
        if (pushed <= eps_) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> ReachableFromSource() const {
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    std::vector<int> stack{s_};
    seen[s_] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        const int v = edges_[e].to;
        if (!seen[v] && edges_[e].residual > eps_) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

  // Walks residual arcs backwards from the sink.
  std::vector<bool> ReachingSink() const {
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    std::vector<int> stack{t_};
    seen[t_] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        // edges_[e] is v -> u; its twin u -> v has residual edges_[e ^ 1].
        const int u = edges_[e].to;
        if (!seen[u] && edges_[e ^ 1].residual > eps_) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int next;
    double residual;
  };

  void Push(int from, int to, double cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
  }

  bool BuildLevels() {
    level_.assign(static_cast<size_t>(n_), -1);
    std::queue<int> q;
    level_[s_] = 0;
    q.push(s_);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        const int v = edges_[e].to;
        if (level_[v] < 0 && edges_[e].residual > eps_) {
          level_[v] = level_[u] + 1;
          q.push(v);
        }
      }
    }
    return level_[t_] >= 0;
  }

  double Augment(int u, double limit) {
    if (u == t_) return limit;
    for (int& e = iter_[u]; e != -1; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.residual <= eps_ || level_[edge.to] != level_[u] + 1) continue;
      const double got = Augment(edge.to, std::min(limit, edge.residual));
      if (got > eps_) {
        edge.residual -= got;
        edges_[e ^ 1].residual += got;
        return got;
      }
    }
    return 0.0;
  }

  int n_, s_, t_;
  double eps_;
  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  std::vector<Edge> edges_;
};

void RejectInfinitePath(const FlowNetwork& net) {
  std::vector<bool> seen(static_cast<size_t>(net.node_count()), false);
  std::vector<int> stack{net.source()};
  seen[net.source()] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& a : net.arcs()) {
      if (a.from != u || !std::isinf(a.capacity) || seen[a.to]) continue;
      if (a.to == net.sink()) {
        throw Error(ErrorCode::kInvalidNetwork,
                    "source reaches sink through infinite arcs only");
      }
      seen[a.to] = true;
      stack.push_back(a.to);
    }
  }
}

}  // namespace

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count < 2 || source < 0 || source >= node_count || sink < 0 ||
      sink >= node_count || source == sink) {
    throw Error(ErrorCode::kInvalidNetwork, "bad node count or terminals");
  }
}

void FlowNetwork::AddArc(int from, int to, double capacity) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_ ||
      from == to) {
    throw Error(ErrorCode::kInvalidNetwork, "bad arc endpoints");
  }
  if (to == source_ || from == sink_) {
    throw Error(ErrorCode::kInvalidNetwork,
                "arcs may not enter the source or leave the sink");
  }
  if (std::isnan(capacity) || capacity < 0.0) {
    throw Error(ErrorCode::kInvalidNetwork,
                "capacity must be non-negative, got " + std::to_string(capacity));
  }
  arcs_.push_back({from, to, capacity});
}

MinCutResult MaxFlowMinCut(const FlowNetwork& network) {
  RejectInfinitePath(network);
  double scale = 1.0;
  for (const auto& a : network.arcs()) {
    if (std::isfinite(a.capacity)) scale = std::max(scale, a.capacity);
  }
  Dinic dinic(network, 1e-12 * scale);

  MinCutResult result;
  result.flow_value = dinic.Run();
  result.source_side = dinic.ReachableFromSource();
  result.sink_side = dinic.ReachingSink();
  for (const auto& a : network.arcs()) {
    if (result.source_side[a.from] && !result.source_side[a.to]) {
      result.cut_capacity += a.capacity;
    }
  }
  return result;
}

}  // namespace stablewelfare
