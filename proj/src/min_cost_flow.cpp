#include "min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual-edge MCMF core (successive shortest paths with potentials).
class Mcmf {
 public:
  explicit Mcmf(int n) : head_(n, -1) {}

  int add_edge(int from, int to, long long cap, double cost) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    cost_.push_back(-cost);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  long long flow_on(int id) const { return cap_[id ^ 1]; }

  // Max flow of min cost from s to t; returns {flow value, augmentations}.
  std::pair<long long, int> run(int s, int t) {
    const int n = static_cast<int>(head_.size());
    pot_.assign(n, 0.0);
    bellman_ford(s);
    long long total = 0;
    int augmentations = 0;
    while (dijkstra(s, t)) {
      for (int v = 0; v < n; ++v) {
        if (dist_[v] < kInf) pot_[v] += dist_[v];
      }
      long long push = std::numeric_limits<long long>::max();
      for (int v = t; v != s;) {
        int e = parent_edge_[v];
        push = std::min(push, cap_[e]);
        v = to_[e ^ 1];
      }
      for (int v = t; v != s;) {
        int e = parent_edge_[v];
        cap_[e] -= push;
        cap_[e ^ 1] += push;
        v = to_[e ^ 1];
      }
      total += push;
      ++augmentations;
    }
    return {total, augmentations};
  }

 private:
  void bellman_ford(int s) {
    const int n = static_cast<int>(head_.size());
    std::vector<double> dist(n, kInf);
    dist[s] = 0.0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        if (dist[u] == kInf) continue;
        for (int e = head_[u]; e != -1; e = next_[e]) {
          if (cap_[e] <= 0) continue;
          double nd = dist[u] + cost_[e];
          if (nd < dist[to_[e]] - 1e-15) {
            dist[to_[e]] = nd;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < kInf) pot_[v] = dist[v];
    }
  }

  bool dijkstra(int s, int t) {
    const int n = static_cast<int>(head_.size());
    dist_.assign(n, kInf);
    parent_edge_.assign(n, -1);
    dist_[s] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    queue.push({0.0, s});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist_[u] + 1e-12) continue;
      for (int e = head_[u]; e != -1; e = next_[e]) {
        if (cap_[e] <= 0) continue;
        int v = to_[e];
        double reduced = cost_[e] + pot_[u] - pot_[v];
        if (reduced < 0 && reduced > -1e-9) reduced = 0;  // fp slack
        double nd = dist_[u] + reduced;
        if (nd < dist_[v] - 1e-15) {
          dist_[v] = nd;
          parent_edge_[v] = e;
          queue.push({nd, v});
        }
      }
    }
    return dist_[t] < kInf;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<long long> cap_;
  std::vector<double> cost_;
  std::vector<int> next_;
  std::vector<double> pot_;
  std::vector<double> dist_;
  std::vector<int> parent_edge_;
};

}  // namespace

FlowResult solve_min_cost_flow(const FlowNetwork& net) {
  for (const FlowEdge& e : net.edges) {
    if (e.lower < 0 || e.lower > e.upper) throw InputError("flow edge needs 0 <= L <= U");
    if (e.from < 0 || e.from >= net.num_nodes || e.to < 0 || e.to >= net.num_nodes) {
      throw InputError("flow edge endpoint out of range");
    }
  }

  // Fold lower bounds into node excesses and close the s-t pair into a
  // circulation; a super source/sink pair then absorbs the excesses.
  const int super_source = net.num_nodes;
  const int super_sink = net.num_nodes + 1;
  Mcmf mcmf(net.num_nodes + 2);

  std::vector<long long> excess(net.num_nodes, 0);
  std::vector<int> residual_id(net.edges.size(), -1);
  long long total_upper = 0;
  for (size_t idx = 0; idx < net.edges.size(); ++idx) {
    const FlowEdge& e = net.edges[idx];
    total_upper += e.upper;
    if (e.upper > e.lower) {
      residual_id[idx] = mcmf.add_edge(e.from, e.to, e.upper - e.lower, e.cost);
    }
    excess[e.to] += e.lower;
    excess[e.from] -= e.lower;
  }
  mcmf.add_edge(net.sink, net.source, total_upper, 0.0);

  long long need = 0;
  for (int v = 0; v < net.num_nodes; ++v) {
    if (excess[v] > 0) {
      mcmf.add_edge(super_source, v, excess[v], 0.0);
      need += excess[v];
    } else if (excess[v] < 0) {
      mcmf.add_edge(v, super_sink, -excess[v], 0.0);
    }
  }

  auto [value, augmentations] = mcmf.run(super_source, super_sink);
  FlowResult result;
  result.augmentations = augmentations;
  result.feasible = (value == need);
  if (!result.feasible) return result;

  result.flow.resize(net.edges.size());
  for (size_t idx = 0; idx < net.edges.size(); ++idx) {
    const FlowEdge& e = net.edges[idx];
    long long f = e.lower;
    if (residual_id[idx] >= 0) f += mcmf.flow_on(residual_id[idx]);
    result.flow[idx] = f;
    result.cost += static_cast<double>(f) * e.cost;
  }
  return result;
}

bool residual_optimality_certificate(const FlowNetwork& net,
                                     const std::vector<long long>& flow,
                                     double tolerance) {
  // Bellman-Ford over the residual arcs, starting from an all-zero labeling;
  // any further improvement after num_nodes rounds exposes a negative cycle.
  struct Arc {
    int from, to;
    double cost;
  };
  std::vector<Arc> arcs;
  for (size_t idx = 0; idx < net.edges.size(); ++idx) {
    const FlowEdge& e = net.edges[idx];
    if (flow[idx] < e.upper) arcs.push_back({e.from, e.to, e.cost});
    if (flow[idx] > e.lower) arcs.push_back({e.to, e.from, -e.cost});
  }
  std::vector<double> dist(net.num_nodes, 0.0);
  for (int round = 0; round < net.num_nodes; ++round) {
    bool changed = false;
    for (const Arc& arc : arcs) {
      if (dist[arc.from] + arc.cost < dist[arc.to] - tolerance) {
        dist[arc.to] = dist[arc.from] + arc.cost;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

}  // namespace nswopt
