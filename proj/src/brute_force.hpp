#pragma once

#include <cstdint>

#include "allocation.hpp"

namespace nswopt {

// Enumeration work limit; a run that would exceed it aborts with a resource
// error rather than silently truncating. NSWOPT_BUDGET overrides the default
// of 1e7 states.
long long default_enumeration_budget();

struct ExactOneSidedResult {
  Allocation allocation;
  Rational product;  // exact prod v_i(A_i)
  double nsw = 0.0;
  long long states = 0;
};

// Exhaustive maximum over all capacity-feasible partial allocations (every
// item goes to one agent or stays out). Exact arithmetic throughout; ties
// broken toward the lexicographically smallest per-item labeling, so outputs
// are canonical.
ExactOneSidedResult exact_one_sided(const OneSidedInstance& inst, long long budget = -1);

struct ExactTwoSidedResult {
  Matching matching;
  Rational product;  // exact prod v_i(mu_i) * prod w_j(mu_j)
  double nsw = 0.0;
  long long states = 0;
};

// Exhaustive maximum over all capacity-feasible full assignments of workers
// to firms (leaving a worker out cannot beat them).
ExactTwoSidedResult exact_two_sided(const TwoSidedInstance& inst, long long budget = -1);

struct ExactWeightedResult {
  Matching matching;
  double ln_nsw = 0.0;
  double nsw = 0.0;
  long long states = 0;
};

// Exhaustive weighted optimum; requires instance weights.
ExactWeightedResult exact_weighted(const TwoSidedInstance& inst, long long budget = -1);

}  // namespace nswopt
