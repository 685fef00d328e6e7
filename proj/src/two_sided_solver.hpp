#pragma once

#include <vector>

#include "allocation.hpp"
#include "min_cost_flow.hpp"

namespace nswopt {

// Flow model of the matching market: every worker node receives exactly one
// unit; each firm has a main copy (must take exactly one worker, edge cost
// -ln(v_i(j) w_j(i))) and a secondary copy (up to c_i - 1 workers, edge cost
// -ln(w_j(i))). Edges to a firm exist only where the relevant values are
// nonzero.
struct TwoSidedNetwork {
  FlowNetwork net;
  int num_firms = 0;
  int num_workers = 0;

  struct AssignEdge {
    int edge_index;
    int worker;
    int firm;
    bool main;
  };
  std::vector<AssignEdge> assign_edges;

  int worker_node(int j) const { return 1 + j; }
  int main_node(int i) const { return 1 + num_workers + i; }
  int secondary_node(int i) const { return 1 + num_workers + num_firms + i; }
};

TwoSidedNetwork build_network(const TwoSidedInstance& inst);

// Reads a feasible integral flow back into a matching; main_worker[i] is the
// worker routed through firm i's main copy.
struct ExtractedMatching {
  Matching matching;
  std::vector<int> main_worker;
};
ExtractedMatching extract_matching(const TwoSidedNetwork& network, const FlowResult& flow);

struct TwoSidedDiagnostics {
  double ln_surrogate = 0.0;  // ln of prod v_i(main_i) * prod w_j(mu_j)
  double surrogate = 0.0;
  double nsw = 0.0;
  double x_ratio = 0.0;  // m/n
  double bound = 0.0;    // x^(1/(1+x))
  double flow_cost = 0.0;
  int augmentations = 0;
  std::uint64_t queries = 0;
  bool zero_welfare = false;
  bool certificate_ok = true;
};

struct TwoSidedResult {
  Matching matching;
  std::vector<int> main_worker;  // empty on the zero-welfare path
  TwoSidedDiagnostics diag;
};

// The 1.33-approximation: one min-cost flow computation. When the flow is
// infeasible the optimum is 0 and an arbitrary feasible matching is
// returned.
TwoSidedResult solve_two_sided(const TwoSidedInstance& inst);

// Any capacity-feasible full assignment (index order).
Matching arbitrary_feasible_matching(const TwoSidedInstance& inst);

struct PtasResult {
  Matching matching;
  bool used_enumeration = false;
  double nsw = 0.0;
  Rational exact_product;  // prod of all utilities when enumeration ran
};

// (1+eps)-approximation for constantly many firms: delegates to the flow
// algorithm when eps >= 0.33 or m >= n/eps^2, otherwise enumerates all
// capacity-feasible assignments (resource error above 1e8 states).
PtasResult solve_two_sided_ptas(const TwoSidedInstance& inst, double eps);

}  // namespace nswopt
