#include "simplex.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kMaxIterations = 200000;

}  // namespace

MasterSolution solve_master_lp(int num_firms, int num_workers,
                               const std::vector<MasterColumn>& cols) {
  const int n = num_firms;
  const int m = num_workers;
  const int rows = n + m;
  const int num_cols = static_cast<int>(cols.size());
  const int num_vars = num_cols + m;  // columns, then worker slacks

  if (num_cols < n) throw InputError("master LP needs a seed column per firm");
  for (int i = 0; i < n; ++i) {
    if (cols[i].firm != i) throw InputError("master LP seed must list firms in order");
  }

  auto column_rows = [&](int var, std::vector<std::pair<int, double>>& out) {
    out.clear();
    if (var < num_cols) {
      const MasterColumn& col = cols[var];
      out.push_back({col.firm, 1.0});
      for (int j : col.workers) out.push_back({n + j, 1.0});
    } else {
      out.push_back({n + (var - num_cols), 1.0});
    }
  };
  auto cost_of = [&](int var) { return var < num_cols ? cols[var].coeff : 0.0; };

  // Initial basis: the n seed columns plus every worker slack. With disjoint
  // seeds B = [[I,0],[E,I]], so B^-1 = [[I,0],[-E,I]] in closed form.
  std::vector<int> basic(rows);
  for (int i = 0; i < n; ++i) basic[i] = i;
  for (int j = 0; j < m; ++j) basic[n + j] = num_cols + j;

  std::vector<std::vector<double>> b_inv(rows, std::vector<double>(rows, 0.0));
  for (int r = 0; r < rows; ++r) b_inv[r][r] = 1.0;
  std::vector<char> covered(m, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : cols[i].workers) {
      if (covered[j]) throw InputError("master LP seed columns must be worker-disjoint");
      covered[j] = 1;
      b_inv[n + j][i] = -1.0;
    }
  }

  std::vector<double> x_basic(rows, 1.0);
  for (int j = 0; j < m; ++j) x_basic[n + j] = covered[j] ? 0.0 : 1.0;

  std::vector<double> pi(rows);
  std::vector<std::pair<int, double>> entries;
  std::vector<double> direction(rows);
  std::vector<char> is_basic(num_vars, 0);
  for (int r = 0; r < rows; ++r) is_basic[basic[r]] = 1;

  int iterations = 0;
  while (true) {
    if (++iterations > kMaxIterations) throw ResourceError("master LP iteration cap hit");

    for (int r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (int q = 0; q < rows; ++q) sum += cost_of(basic[q]) * b_inv[q][r];
      pi[r] = sum;
    }

    // Bland: lowest-index variable with positive reduced cost enters.
    int entering = -1;
    for (int var = 0; var < num_vars; ++var) {
      if (is_basic[var]) continue;
      column_rows(var, entries);
      double reduced = cost_of(var);
      for (auto [r, a] : entries) reduced -= pi[r] * a;
      if (reduced > kPivotTol) {
        entering = var;
        break;
      }
    }
    if (entering < 0) break;

    column_rows(entering, entries);
    for (int r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (auto [row, a] : entries) sum += b_inv[r][row] * a;
      direction[r] = sum;
    }

    int leave_pos = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (direction[r] <= kPivotTol) continue;
      double ratio = x_basic[r] / direction[r];
      if (leave_pos < 0 || ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && basic[r] < basic[leave_pos])) {
        leave_pos = r;
        best_ratio = ratio;
      }
    }
    if (leave_pos < 0) throw InputError("master LP unbounded; malformed columns");

    double pivot = direction[leave_pos];
    for (int c = 0; c < rows; ++c) b_inv[leave_pos][c] /= pivot;
    x_basic[leave_pos] /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave_pos || std::abs(direction[r]) < 1e-14) continue;
      double factor = direction[r];
      for (int c = 0; c < rows; ++c) b_inv[r][c] -= factor * b_inv[leave_pos][c];
      x_basic[r] -= factor * x_basic[leave_pos];
      if (x_basic[r] < 0 && x_basic[r] > -1e-11) x_basic[r] = 0.0;
    }
    is_basic[basic[leave_pos]] = 0;
    is_basic[entering] = 1;
    basic[leave_pos] = entering;
  }

  MasterSolution solution;
  solution.iterations = iterations;
  solution.y.assign(num_cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basic[r] < num_cols) solution.y[basic[r]] = std::max(0.0, x_basic[r]);
  }
  solution.beta.assign(pi.begin(), pi.begin() + n);
  solution.alpha.assign(m, 0.0);
  for (int j = 0; j < m; ++j) solution.alpha[j] = std::max(0.0, pi[n + j]);
  for (int k = 0; k < num_cols; ++k) solution.objective += cols[k].coeff * solution.y[k];
  return solution;
}

}  // namespace nswopt
