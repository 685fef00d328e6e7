#include "rounding.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kSnapTol = 1e-9;

// Bipartite fractional graph over firm nodes [0,n) and worker nodes
// [n, n+m); edges are the strictly fractional entries of x.
struct Pipage {
  int n, m;
  std::vector<std::vector<double>> x;

  Pipage(const std::vector<std::vector<double>>& marginals)
      : n(static_cast<int>(marginals.size())),
        m(n > 0 ? static_cast<int>(marginals[0].size()) : 0),
        x(marginals) {
    for (auto& row : x) {
      for (double& v : row) {
        if (v < kSnapTol) v = 0.0;
        if (v > 1.0 - kSnapTol) v = 1.0;
      }
    }
  }

  bool fractional(int i, int j) const { return x[i][j] > 0.0 && x[i][j] < 1.0; }

  std::vector<std::pair<int, int>> fractional_neighbors(int node) const {
    std::vector<std::pair<int, int>> out;  // (neighbor node, worker index)
    if (node < n) {
      for (int j = 0; j < m; ++j) {
        if (fractional(node, j)) out.push_back({n + j, j});
      }
    } else {
      int j = node - n;
      for (int i = 0; i < n; ++i) {
        if (fractional(i, j)) out.push_back({i, j});
      }
    }
    return out;
  }

  // Walk (node sequence) whose consecutive pairs are fractional edges:
  // either a cycle (first == last) or a maximal path.
  std::vector<int> find_walk() const {
    int start = -1;
    for (int v = 0; v < n + m && start < 0; ++v) {
      if (!fractional_neighbors(v).empty()) start = v;
    }
    if (start < 0) return {};

    // DFS for a cycle.
    std::vector<int> state(n + m, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> parent(n + m, -1);
    std::vector<int> stack;
    for (int root = 0; root < n + m; ++root) {
      if (state[root] != 0 || fractional_neighbors(root).empty()) continue;
      stack.push_back(root);
      parent[root] = -1;
      while (!stack.empty()) {
        int v = stack.back();
        if (state[v] == 0) state[v] = 1;
        bool descended = false;
        for (auto [u, j] : fractional_neighbors(v)) {
          (void)j;
          if (u == parent[v]) continue;
          if (state[u] == 1) {
            // Cycle: v ... u along parents, closed by edge (v,u).
            std::vector<int> cycle{u};
            for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
            std::reverse(cycle.begin() + 1, cycle.end());
            cycle.push_back(u);
            return cycle;
          }
          if (state[u] == 0) {
            parent[u] = v;
            stack.push_back(u);
            descended = true;
            break;
          }
        }
        if (!descended) {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }

    // Forest: maximal path from a degree-1 endpoint.
    int leaf = -1;
    for (int v = 0; v < n + m; ++v) {
      if (fractional_neighbors(v).size() == 1) {
        leaf = v;
        break;
      }
    }
    std::vector<int> path{leaf};
    int prev = -1;
    int cur = leaf;
    while (true) {
      int next = -1;
      for (auto [u, j] : fractional_neighbors(cur)) {
        (void)j;
        if (u != prev) {
          next = u;
          break;
        }
      }
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  }

  std::pair<int, int> edge_of(int a, int b) const {  // (firm, worker)
    return a < n ? std::pair<int, int>{a, b - n} : std::pair<int, int>{b, a - n};
  }

  void snap(int i, int j) {
    if (x[i][j] < kSnapTol) x[i][j] = 0.0;
    if (x[i][j] > 1.0 - kSnapTol) x[i][j] = 1.0;
  }
};

}  // namespace

Matching dependent_rounding(const std::vector<std::vector<double>>& marginals, Rng& rng) {
  Pipage graph(marginals);
  const int n = graph.n;
  const int m = graph.m;

  while (true) {
    std::vector<int> walk = graph.find_walk();
    if (walk.empty()) break;
    const int num_edges = static_cast<int>(walk.size()) - 1;
    if (num_edges <= 0) break;

    // Alternate edges into two groups; shifting +delta on one and -delta on
    // the other preserves every interior node sum.
    double up = 2.0, down = 2.0;  // room to raise/lower the even group
    for (int e = 0; e < num_edges; ++e) {
      auto [i, j] = graph.edge_of(walk[e], walk[e + 1]);
      if (e % 2 == 0) {
        up = std::min(up, 1.0 - graph.x[i][j]);
        down = std::min(down, graph.x[i][j]);
      } else {
        up = std::min(up, graph.x[i][j]);
        down = std::min(down, 1.0 - graph.x[i][j]);
      }
    }
    double shift = rng.uniform01() * (up + down) < down ? up : -down;
    for (int e = 0; e < num_edges; ++e) {
      auto [i, j] = graph.edge_of(walk[e], walk[e + 1]);
      graph.x[i][j] += (e % 2 == 0) ? shift : -shift;
      graph.snap(i, j);
    }
  }

  Matching mu;
  mu.worker_to_firm.assign(m, Matching::kUnassigned);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (graph.x[i][j] == 1.0) {
        if (mu.worker_to_firm[j] != Matching::kUnassigned) {
          throw InputError("dependent_rounding: worker column sums must be <= 1");
        }
        mu.worker_to_firm[j] = i;
      }
    }
  }
  return mu;
}

}  // namespace nswopt
