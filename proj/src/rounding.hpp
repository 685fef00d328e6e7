#pragma once

#include <vector>

#include "allocation.hpp"
#include "generator.hpp"

namespace nswopt {

// Randomized integralization of fractional marginals x[i][j] (firms x
// workers, worker column sums <= 1). Cycle/path pipage on the bipartite
// support: repeatedly pick a cycle, or a maximal path once none exist, and
// shift mass in one of the two alternating directions with probabilities
// that keep every marginal exact. Guarantees, in every realization:
//   - worker degree <= 1,
//   - firm load <= ceil(sum_j x[i][j]),
// and Pr[worker j -> firm i] = x[i][j] exactly.
Matching dependent_rounding(const std::vector<std::vector<double>>& x, Rng& rng);

}  // namespace nswopt
