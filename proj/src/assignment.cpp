#include "assignment.hpp"

#include <limits>
#include <numeric>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kInf = 1e100;

}  // namespace

ProductMatching max_product_matching(const std::vector<std::vector<Rational>>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) return {};
  const int m = static_cast<int>(weights[0].size());
  if (m < n) throw InputError("max_product_matching needs at least as many items as agents");
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != m) throw InputError("ragged weight matrix");
    for (const auto& w : row) {
      if (w.is_negative()) throw InputError("matching weights must be nonnegative");
    }
  }

  // cost[i][j] = -ln(w) on positive edges; excluded edges stay at +inf.
  std::vector<std::vector<double>> cost(n, std::vector<double>(m, kInf));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!weights[i][j].is_zero()) cost[i][j] = -weights[i][j].ln();
    }
  }

  ProductMatching result;
  result.agent_to_item.assign(n, -1);

  // Shortest-augmenting-path assignment with potentials (1-indexed scratch).
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> item_to_agent(m + 1, 0), way(m + 1, 0);
  bool infeasible = false;
  for (int i = 1; i <= n && !infeasible; ++i) {
    item_to_agent[0] = i;
    int j0 = 0;
    std::vector<double> min_slack(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = item_to_agent[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double c = cost[i0 - 1][j - 1];
        double cur = (c >= kInf) ? kInf : c - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      if (j1 < 0 || delta >= kInf / 2) {
        infeasible = true;  // the positive-edge graph has no N-perfect matching
        break;
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[item_to_agent[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (item_to_agent[j0] != 0);
    while (j0 != 0) {
      int j1 = way[j0];
      item_to_agent[j0] = item_to_agent[j1];
      j0 = j1;
    }
  }

  if (infeasible) {
    result.zero_product = true;
    std::iota(result.agent_to_item.begin(), result.agent_to_item.end(), 0);
    return result;
  }
  for (int j = 1; j <= m; ++j) {
    if (item_to_agent[j] != 0) result.agent_to_item[item_to_agent[j] - 1] = j - 1;
  }
  return result;
}

}  // namespace nswopt
