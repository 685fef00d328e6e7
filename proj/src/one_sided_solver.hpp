#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "allocation.hpp"
#include "local_search.hpp"

namespace nswopt {

// Reduction to the exact-capacity variant: when m < sum(c_i), worthless dummy
// items are appended until every agent can be filled to exactly c_i items.
// Solutions translate back by dropping items at index >= original_items.
struct ExactCapacitatedReduction {
  OneSidedInstance instance;
  int original_items = 0;

  bool has_dummies() const { return instance.num_items > original_items; }
};

ExactCapacitatedReduction to_exact_capacitated(const OneSidedInstance& inst);

// Phase 3: perfect matching of agents to the phase-1 items maximizing the
// product of the augmented bundle values; returns bundles R_i + delta(i).
Allocation rematch(const OneSidedInstance& inst,
                   const std::vector<std::vector<int>>& bundles,
                   const std::vector<int>& phase1_items);

struct OneSidedDiagnostics {
  int swaps = 0;
  long long iterations_bound = 0;
  std::uint64_t queries = 0;
  double phase_ms[3] = {0, 0, 0};
  double nsw = 0.0;
  bool zero_welfare = false;  // phase 1 proved the optimum is 0
  double eps_bar = 0.0;
  double eps_hat = 0.0;
  int exact_items = 0;  // item count after the dummy reduction
};

struct OneSidedResult {
  Allocation allocation;
  OneSidedDiagnostics diag;
};

// Full run record; keeps the exact-capacitated instance and the final local
// search state alive for the price/termination diagnostics.
struct OneSidedRun {
  std::shared_ptr<const OneSidedInstance> exact_instance;
  LocalSearchState state;        // valid unless diag.zero_welfare
  std::vector<int> phase1_items;
  OneSidedResult result;
};

// The (6+eps)-approximation: maximum-product matching, capacity-preserving
// local search, rematching. eps is scaled down by 6 internally so the
// end-to-end factor is 6(1+eps/6) <= 6+eps.
OneSidedResult solve_one_sided(const OneSidedInstance& inst, double eps);
OneSidedRun solve_one_sided_run(const OneSidedInstance& inst, double eps);

// Fairness diagnostic: the largest gamma for which the allocation is
// gamma-EF1 under capacities -- for every pair (i,k) and every nonempty
// S subseteq A_k with |S| <= c_i there is some g in S with
// v_i(A_i) >= gamma * v_i(S - g). +infinity when no pair generates envy.
double ef1_gamma(const OneSidedInstance& inst, const Allocation& alloc);

}  // namespace nswopt
