#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Own copy of the dual constraint's right-hand side, so this checker shares
// no code with the separation oracle it audits.
double dual_rhs(const TwoSidedInstance& inst, const std::vector<double>& eta,
                const std::vector<double>& zeta, int firm, const std::vector<int>& workers) {
  double rhs = 0.0;
  if (eta[firm] > 0.0) {
    Rational v = inst.firm_valuations[firm].value(workers);
    if (v.is_zero()) return -kInf;
    rhs += eta[firm] * v.ln();
  }
  for (int j : workers) {
    if (zeta[j] == 0.0) continue;
    const Rational& w = inst.worker_values[j][firm];
    if (w.is_zero()) return -kInf;
    rhs += zeta[j] * w.ln();
  }
  return rhs;
}

}  // namespace

std::string SwapWitness::describe() const {
  std::ostringstream out;
  if (full) {
    out << "full swap: agent " << agent_a << " item " << item_a << " <-> agent " << agent_b
        << " item " << item_b << ", log gain " << log_gain;
  } else {
    out << "partial swap: agent " << agent_a << " drops " << item_a << " for unallocated "
        << item_b << ", log gain " << log_gain;
  }
  return out.str();
}

bool verify_no_improving_swap(const LocalSearchState& state, SwapWitness* witness) {
  const OneSidedInstance& inst = *state.inst;
  const int n = inst.num_agents();

  // Recompute everything from value queries. The acceptance threshold gets
  // the same 1e-9 slack the solver applied.
  const int big_m = std::max(1, inst.num_items);
  const double threshold = n * std::log1p(std::expm1(std::log1p(state.eps) / big_m)) + 1e-9;

  std::vector<double> log_base(n, 0.0);
  std::vector<Rational> endow(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (!state.active[i]) continue;
    Rational best(0);
    for (int j : state.pool_items) {
      Rational v = inst.valuations[i].value_of_item(j);
      if (v > best) best = v;
    }
    endow[i] = best;
    log_base[i] = (best + inst.valuations[i].value(state.bundles[i])).ln();
  }

  auto swapped_log = [&](int agent, int out, int in) {
    std::vector<int> items;
    items.reserve(state.bundles[agent].size() + 1);
    for (int x : state.bundles[agent]) {
      if (x != out) items.push_back(x);
    }
    items.push_back(in);
    return (endow[agent] + inst.valuations[agent].value(items)).ln();
  };

  for (int i = 0; i < n; ++i) {
    if (!state.active[i]) continue;
    for (int j : state.bundles[i]) {
      for (int k : state.pool_items) {
        int other = state.owner[k];
        if (other == -1) {
          double gain = swapped_log(i, j, k) - log_base[i];
          if (gain > threshold) {
            if (witness) *witness = {false, i, j, -1, k, gain};
            return false;
          }
        } else if (other != i && state.active[other]) {
          double gain = swapped_log(i, j, k) + swapped_log(other, k, j) - log_base[i] -
                        log_base[other];
          if (gain > threshold) {
            if (witness) *witness = {true, i, j, other, k, gain};
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::string CycleWitness::describe() const {
  std::ostringstream out;
  out << "residual cycle of cost " << cost << ":";
  for (int v : nodes) out << " " << v;
  return out.str();
}

bool verify_flow_optimal(const FlowNetwork& net, const std::vector<long long>& flow,
                         double tolerance, CycleWitness* witness) {
  if (flow.size() != net.edges.size()) return false;
  std::vector<long long> balance(net.num_nodes, 0);
  for (size_t idx = 0; idx < net.edges.size(); ++idx) {
    const FlowEdge& e = net.edges[idx];
    if (flow[idx] < e.lower || flow[idx] > e.upper) return false;
    balance[e.from] -= flow[idx];
    balance[e.to] += flow[idx];
  }
  for (int v = 0; v < net.num_nodes; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) return false;
  }

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
  std::vector<int> pred(net.num_nodes, -1);
  int flagged = -1;
  for (int round = 0; round < net.num_nodes && flagged < 0; ++round) {
    bool changed = false;
    for (const Arc& arc : arcs) {
      if (dist[arc.from] + arc.cost < dist[arc.to] - tolerance) {
        dist[arc.to] = dist[arc.from] + arc.cost;
        pred[arc.to] = arc.from;
        changed = true;
        if (round == net.num_nodes - 1) flagged = arc.to;
      }
    }
    if (!changed) return true;
  }
  if (flagged < 0) return true;

  if (witness) {
    // Walk predecessors until a node repeats; that loop is the cycle.
    std::vector<int> seen(net.num_nodes, 0);
    int v = flagged;
    for (int step = 0; step < net.num_nodes; ++step) v = pred[v];
    std::vector<int> cycle;
    for (int u = v; !seen[u]; u = pred[u]) {
      seen[u] = 1;
      cycle.push_back(u);
    }
    std::reverse(cycle.begin(), cycle.end());
    witness->nodes = cycle;
    witness->cost = 0.0;
    // Recover the arc costs along the cycle.
    for (size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[t];
      int to = cycle[(t + 1) % cycle.size()];
      double best = kInf;
      for (const Arc& arc : arcs) {
        if (arc.from == from && arc.to == to) best = std::min(best, arc.cost);
      }
      witness->cost += best;
    }
  }
  return false;
}

std::string DualViolationWitness::describe() const {
  std::ostringstream out;
  out << "dual constraint violated by " << violation << " for firm " << firm << ", workers {";
  for (size_t t = 0; t < workers.size(); ++t) out << (t ? "," : "") << workers[t];
  out << "}";
  return out.str();
}

bool verify_dual_feasible(const TwoSidedInstance& inst, const std::vector<double>& eta,
                          const std::vector<double>& zeta, const std::vector<double>& alpha,
                          const std::vector<double>& beta, double eps,
                          DualViolationWitness* witness) {
  const int n = inst.num_firms();
  const int m = inst.num_workers;
  if (m > 20) throw InputError("verify_dual_feasible is exhaustive; m <= 20 required");
  const double slack = std::log1p(eps / 2.0) + 1e-9;

  bool ok = true;
  double worst = -kInf;
  for (int i = 0; i < n; ++i) {
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
      if (std::popcount(mask) > inst.capacities[i]) continue;
      std::vector<int> members;
      double lhs = beta[i];
      for (int j = 0; j < m; ++j) {
        if (mask & (uint32_t{1} << j)) {
          members.push_back(j);
          lhs += alpha[j];
        }
      }
      double rhs = dual_rhs(inst, eta, zeta, i, members);
      double violation = rhs - lhs;
      if (violation > slack && violation > worst) {
        ok = false;
        worst = violation;
        if (witness) *witness = {i, members, violation};
      }
    }
  }
  return ok;
}

}  // namespace nswopt
