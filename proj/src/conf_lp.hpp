#pragma once

#include <vector>

#include "allocation.hpp"
#include "separation.hpp"
#include "simplex.hpp"

namespace nswopt {

enum class ConfLpStatus {
  kOk,
  kZeroOptimum,  // no matching keeps every positively weighted factor nonzero
  kColumnCap,    // column budget hit; result carries the partial solve
};

struct ConfLpResult {
  ConfLpStatus status = ConfLpStatus::kOk;
  std::vector<MasterColumn> columns;
  std::vector<double> y;                // per column
  std::vector<std::vector<double>> x;   // marginals x[i][j] = sum_{S with j} y_{i,S}
  double objective = 0.0;               // -inf on the zero-optimum path
  std::vector<double> alpha;            // final master duals, per worker
  std::vector<double> beta;             // final master duals, per firm
  int oracle_calls = 0;
  int guesses = 0;                      // budget binary-search steps
  Matching fallback;                    // feasible matching (seed or arbitrary)
};

// Solves the configuration LP to within an additive ln(1+eps) of its
// optimum. A feasibility flow decides whether any matching keeps every
// positively weighted factor nonzero and doubles as the integral seed; a
// budget value for the optimum is then binary-searched over
// [lnA, lnA + ln(2m)] and each guess runs column generation -- restricted
// master, separation-oracle pricing -- until the oracle reports feasibility
// or no column can make measurable progress. Requires additive firm
// valuations and weights.
ConfLpResult solve_conf_lp(const TwoSidedInstance& inst, double eps, int column_cap = 10000);

}  // namespace nswopt
