#pragma once

#include <vector>

#include "instance.hpp"

namespace nswopt {

// Partial allocation: n pairwise-disjoint bundles of items (union may omit
// items).
struct Allocation {
  std::vector<std::vector<int>> bundles;

  // Throws InputError if bundles overlap or refer to out-of-range items.
  void validate(const OneSidedInstance& inst) const;
  bool is_feasible(const OneSidedInstance& inst) const;  // |A_i| <= c_i
};

// Many-to-one matching: each worker is assigned to at most one firm.
struct Matching {
  static constexpr int kUnassigned = -1;

  std::vector<int> worker_to_firm;  // m entries, firm index or kUnassigned

  std::vector<std::vector<int>> firm_loads(int num_firms) const;
  void validate(const TwoSidedInstance& inst) const;  // includes |mu_i| <= c_i
  bool is_fully_assigned() const;
};

// Geometric mean of agent utilities, evaluated in the log domain; exactly 0
// whenever some agent's utility is 0.
double nsw_one_sided(const OneSidedInstance& inst, const Allocation& alloc);

// Geometric mean over firms and workers; an unassigned worker has utility 0.
double nsw_two_sided(const TwoSidedInstance& inst, const Matching& mu);

// Weighted objective prod v_i^eta_i * prod w_j^zeta_j. Weights must be
// nonnegative and sum to 1 (tolerance 1e-9). A factor with weight 0
// contributes 1 regardless of its utility (0^0 = 1), so zero-weight parties
// never zero out the objective.
double nsw_weighted(const TwoSidedInstance& inst, const Matching& mu,
                    const std::vector<Rational>& firm_weights,
                    const std::vector<Rational>& worker_weights);

// ln of the weighted objective; -infinity when it is 0.
double log_nsw_weighted(const TwoSidedInstance& inst, const Matching& mu,
                        const std::vector<Rational>& firm_weights,
                        const std::vector<Rational>& worker_weights);

// Exact utility products, for oracle-grade comparisons.
Rational utility_product_one_sided(const OneSidedInstance& inst, const Allocation& alloc);
Rational utility_product_two_sided(const TwoSidedInstance& inst, const Matching& mu);

}  // namespace nswopt
