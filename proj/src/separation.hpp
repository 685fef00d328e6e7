#pragma once

#include <optional>
#include <vector>

#include "instance.hpp"
#include "simplex.hpp"

namespace nswopt {

// Dual query point: alpha per worker (>= 0), beta per firm, budget o with
// sum(alpha) + sum(beta) <= o while the point is being separated.
struct DualPoint {
  std::vector<double> alpha;
  std::vector<double> beta;
  double budget = 0.0;
};

// Knapsack table for one (firm, forced top item) pair: cell (x, y) holds the
// minimum of sum alpha' over sets S' containing the forced item with
// |S'| = x and sum of scaled values = y. Take-bits allow reconstructing the
// minimizer of any cell.
struct KnapsackTable {
  int forced_item = -1;
  long long forced_scaled = 0;       // scaled value of the forced item (= K)
  std::vector<int> items;            // optional items, ascending
  std::vector<long long> scaled;     // their scaled values
  int max_count = 0;                 // x ranges over 0..max_count
  long long max_value = 0;           // y ranges over 0..max_value

  std::vector<std::vector<double>> min_alpha;  // [x][y]; +inf unreachable
  std::vector<std::vector<double>> value_sum;  // true value of the argmin set
  std::vector<std::vector<std::uint64_t>> mask;  // argmin set, bit per item position

  std::vector<int> reconstruct(int count, long long value) const;
};

// Fills the table by 0/1 knapsack over the optional items.
KnapsackTable knapsack_min_alpha_table(int forced_item, long long forced_scaled,
                                       double forced_alpha, double forced_value,
                                       const std::vector<int>& items,
                                       const std::vector<long long>& scaled,
                                       const std::vector<double>& alpha_prime,
                                       const std::vector<double>& true_values,
                                       int max_count, long long max_value);

struct SeparationOutcome {
  // Candidate with the largest reduced cost coeff - lhs when that exceeds
  // tolerance; any returned pair satisfies the relaxed violation test
  //   sum_{j in S'} alpha_j + beta_i < eta_i ln(v_i(S')(1+eps/2)) + sum zeta_j ln w_j(i)
  // strictly. Absent ("approximately feasible") certifies that no dual
  // constraint is violated by more than eta_i ln(1+eps/2) plus tolerance.
  std::optional<MasterColumn> violated;
  double violated_lhs = 0.0;      // sum alpha + beta of the returned pair
  double max_reduced = 0.0;       // max reduced cost over all candidates
  bool feasible() const { return !violated.has_value(); }
};

// Approximate separation for the configuration LP dual. Firms with zero
// weight are priced by sorted prefixes; positively weighted firms run the
// value-scaled knapsack DP over every choice of the most valuable member.
// Firm valuations must be additive.
SeparationOutcome separation_oracle(const TwoSidedInstance& inst,
                                    const std::vector<double>& eta,
                                    const std::vector<double>& zeta,
                                    const DualPoint& dual, double eps);

// Column objective coefficient eta_i ln v_i(S) + sum_{j in S} zeta_j ln w_j(i),
// with exact rationals inside the logs. -infinity when a positively weighted
// factor is zero.
double column_coefficient(const TwoSidedInstance& inst, const std::vector<double>& eta,
                          const std::vector<double>& zeta, int firm,
                          const std::vector<int>& workers);

}  // namespace nswopt
