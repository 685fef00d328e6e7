#pragma once

#include <vector>

namespace nswopt {

// One configuration-LP column: firm `firm` takes worker set `workers` with
// the given objective coefficient.
struct MasterColumn {
  int firm = 0;
  std::vector<int> workers;
  double coeff = 0.0;
};

struct MasterSolution {
  double objective = 0.0;
  std::vector<double> y;      // per column
  std::vector<double> alpha;  // per worker, >= 0 (dual of the <= 1 row)
  std::vector<double> beta;   // per firm (dual of the = 1 row)
  int iterations = 0;
};

// Maximizes sum coeff_k y_k subject to: per firm, its columns' y sum to 1;
// per worker, the y of columns containing it sum to at most 1; y >= 0.
//
// Self-contained primal simplex with an explicit basis inverse and Bland's
// rule. The first n columns must form a feasible integral seed: exactly one
// column per firm in firm order, pairwise worker-disjoint. Restricted
// masters stay tiny, so a dense textbook implementation is enough.
MasterSolution solve_master_lp(int num_firms, int num_workers,
                               const std::vector<MasterColumn>& cols);

}  // namespace nswopt
