#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conf_lp.hpp"

namespace nswopt {

struct RoundingTrial {
  std::uint64_t seed = 0;
  double ln_nsw = 0.0;  // -inf when a positively weighted factor came out 0
};

struct WeightedDiagnostics {
  ConfLpStatus lp_status = ConfLpStatus::kOk;
  double lp_objective = 0.0;
  double floor_bound = 0.0;  // lp_objective - sum(eta)/e
  double best_ln_nsw = 0.0;
  double nsw = 0.0;
  int columns = 0;
  int oracle_calls = 0;
  // Every draw hit a zero factor (the LP's additive slack can leave a
  // positively weighted worker fractionally uncovered); the integral seed
  // matching was returned instead.
  bool used_seed_fallback = false;
  std::vector<RoundingTrial> trials;
};

struct WeightedResult {
  Matching matching;
  std::vector<std::vector<double>> x;  // LP marginals
  WeightedDiagnostics diag;
};

// Configuration-LP solve plus `trials` independent dependent roundings;
// returns the matching with the best weighted welfare. Needs additive firm
// valuations and instance weights.
WeightedResult solve_weighted(const TwoSidedInstance& inst, double eps, int trials,
                              std::uint64_t seed);

struct CombinedResult {
  Matching matching;
  std::string branch;  // "flow" or "rounding"
  double nsw = 0.0;
  double flow_nsw = 0.0;
  double weighted_nsw = 0.0;
  double bound = 0.0;  // min(x^(1/(1+x)), e^(1/(e(x+1)) + eps)), x = m/n
};

// Unweighted two-sided instances with additive firms: runs both the flow
// algorithm and the uniformly weighted LP pipeline, keeps the better
// matching.
CombinedResult solve_unweighted_best(const TwoSidedInstance& inst, double eps, int trials,
                                     std::uint64_t seed);

}  // namespace nswopt
