#pragma once

#include <vector>

namespace nswopt {

// Edge with flow bounds L <= f <= U and a per-unit cost (log-domain double).
struct FlowEdge {
  int from = 0;
  int to = 0;
  long long lower = 0;
  long long upper = 0;
  double cost = 0.0;
};

struct FlowNetwork {
  int num_nodes = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowEdge> edges;
};

struct FlowResult {
  bool feasible = false;
  std::vector<long long> flow;  // per edge, valid when feasible
  double cost = 0.0;
  int augmentations = 0;
};

// Integral min-cost flow meeting every lower bound. Lower bounds are folded
// into node excesses (plus a sink->source closure arc); the residual problem
// is solved by successive shortest augmenting paths with node potentials,
// seeded by one Bellman-Ford pass so negative costs are absorbed. The
// network must not contain a negative-cost directed cycle at zero flow.
FlowResult solve_min_cost_flow(const FlowNetwork& net);

// Solver-side optimality certificate: true when the residual graph of `flow`
// has no directed cycle with total cost below -tolerance.
bool residual_optimality_certificate(const FlowNetwork& net,
                                     const std::vector<long long>& flow,
                                     double tolerance);

}  // namespace nswopt
