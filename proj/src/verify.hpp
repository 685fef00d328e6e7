#pragma once

#include <string>
#include <vector>

#include "local_search.hpp"
#include "min_cost_flow.hpp"

namespace nswopt {

// Independent re-checks of the solver contracts. Each one re-derives its
// condition from scratch -- none of them reuses the solver's cached values
// or code paths -- and reports a witness on failure.

struct SwapWitness {
  bool full = false;
  int agent_a = -1, item_a = -1;
  int agent_b = -1, item_b = -1;
  double log_gain = 0.0;

  std::string describe() const;
};

// True iff no Full or Partial swap improves the endowed product beyond the
// state's threshold. Endowed values are recomputed with fresh value queries.
bool verify_no_improving_swap(const LocalSearchState& state, SwapWitness* witness = nullptr);

struct CycleWitness {
  std::vector<int> nodes;
  double cost = 0.0;

  std::string describe() const;
};

// True iff `flow` respects all bounds and conservation and its residual
// graph has no directed cycle cheaper than -tolerance.
bool verify_flow_optimal(const FlowNetwork& net, const std::vector<long long>& flow,
                         double tolerance, CycleWitness* witness = nullptr);

struct DualViolationWitness {
  int firm = -1;
  std::vector<int> workers;
  double violation = 0.0;

  std::string describe() const;
};

// True iff no dual constraint over (firm, set with |S| <= c_i) is violated
// by more than ln(1+eps/2). Exhaustive over subsets; needs small m.
bool verify_dual_feasible(const TwoSidedInstance& inst, const std::vector<double>& eta,
                          const std::vector<double>& zeta, const std::vector<double>& alpha,
                          const std::vector<double>& beta, double eps,
                          DualViolationWitness* witness = nullptr);

}  // namespace nswopt
