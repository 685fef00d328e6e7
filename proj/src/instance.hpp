#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "valuation.hpp"

namespace nswopt {

// <N, M, V, C>: n agents with capacities receive disjoint bundles of m items.
struct OneSidedInstance {
  std::vector<Valuation> valuations;  // one per agent, universe size m
  std::vector<int> capacities;        // one per agent, all >= 1
  int num_items = 0;

  int num_agents() const { return static_cast<int>(valuations.size()); }
  int capacity_sum() const;
  std::uint64_t total_queries() const;
  void reset_queries() const;

  // Throws InputError on any violated structural invariant.
  void validate() const;
};

// Per-side weights for the weighted two-sided objective; they must sum to 1.
struct NswWeights {
  std::vector<Rational> firms;
  std::vector<Rational> workers;
};

// <F, W, V, W, C>: n firms with capacities are matched with m workers. Firms
// value worker subsets; worker j values firm i at worker_values[j][i].
struct TwoSidedInstance {
  std::vector<Valuation> firm_valuations;           // one per firm, universe m
  std::vector<std::vector<Rational>> worker_values; // m rows, n columns
  std::vector<int> capacities;                      // one per firm, all >= 1
  int num_workers = 0;
  std::optional<NswWeights> weights;                // present for weighted runs

  int num_firms() const { return static_cast<int>(firm_valuations.size()); }
  int capacity_sum() const;
  std::uint64_t total_queries() const;
  void reset_queries() const;

  // Checks counts, nonnegativity, capacity adequacy (sum c_i >= m), and the
  // weight-sum condition when weights are present.
  void validate() const;
};

}  // namespace nswopt
