#include "separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kViolationTol = 1e-9;

// ln w_j(i) with the 0^0 = 1 convention folded in: a zero-weight worker
// contributes 0 regardless of its value.
double zeta_log_term(const Rational& w, double zeta) {
  if (zeta == 0.0) return 0.0;
  if (w.is_zero()) return -kInf;
  return zeta * w.ln();
}

}  // namespace

std::vector<int> KnapsackTable::reconstruct(int count, long long value) const {
  std::vector<int> members{forced_item};
  std::uint64_t bits = mask[count][value];
  for (size_t pos = 0; pos < items.size(); ++pos) {
    if (bits & (std::uint64_t{1} << pos)) members.push_back(items[pos]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

KnapsackTable knapsack_min_alpha_table(int forced_item, long long forced_scaled,
                                       double forced_alpha, double forced_value,
                                       const std::vector<int>& items,
                                       const std::vector<long long>& scaled,
                                       const std::vector<double>& alpha_prime,
                                       const std::vector<double>& true_values,
                                       int max_count, long long max_value) {
  if (max_value > 2000000) {
    throw ResourceError("separation DP table too large; shrink m or raise eps");
  }
  KnapsackTable table;
  table.forced_item = forced_item;
  table.forced_scaled = forced_scaled;
  table.items = items;
  table.scaled = scaled;
  table.max_count = max_count;
  table.max_value = max_value;

  if (items.size() > 63) throw ResourceError("separation DP limited to 63 optional items");
  const int ny = static_cast<int>(max_value) + 1;
  table.min_alpha.assign(max_count + 1, std::vector<double>(ny, kInf));
  table.value_sum.assign(max_count + 1, std::vector<double>(ny, 0.0));
  table.mask.assign(max_count + 1, std::vector<std::uint64_t>(ny, 0));
  if (forced_scaled <= max_value && max_count >= 1) {
    table.min_alpha[1][forced_scaled] = forced_alpha;
    table.value_sum[1][forced_scaled] = forced_value;
  }
  for (size_t pos = 0; pos < items.size(); ++pos) {
    const long long v = scaled[pos];
    const double a = alpha_prime[pos];
    for (int x = max_count; x >= 2; --x) {
      for (long long y = max_value; y >= v; --y) {
        double base = table.min_alpha[x - 1][y - v];
        if (base == kInf) continue;
        double with = base + a;
        double with_value = table.value_sum[x - 1][y - v] + true_values[pos];
        // Ties on alpha' prefer the higher true value; scaled values only
        // resolve the originals to 1/K granularity.
        bool better = with < table.min_alpha[x][y] - 1e-15 ||
                      (with <= table.min_alpha[x][y] + 1e-15 &&
                       with_value > table.value_sum[x][y]);
        if (better) {
          table.min_alpha[x][y] = std::min(with, table.min_alpha[x][y]);
          table.value_sum[x][y] = with_value;
          table.mask[x][y] = table.mask[x - 1][y - v] | (std::uint64_t{1} << pos);
        }
      }
    }
  }
  return table;
}

double column_coefficient(const TwoSidedInstance& inst, const std::vector<double>& eta,
                          const std::vector<double>& zeta, int firm,
                          const std::vector<int>& workers) {
  double coeff = 0.0;
  if (eta[firm] > 0.0) {
    Rational v = inst.firm_valuations[firm].value(workers);
    if (v.is_zero()) return -kInf;
    coeff += eta[firm] * v.ln();
  }
  for (int j : workers) {
    double term = zeta_log_term(inst.worker_values[j][firm], zeta[j]);
    if (term == -kInf) return -kInf;
    coeff += term;
  }
  return coeff;
}

SeparationOutcome separation_oracle(const TwoSidedInstance& inst,
                                    const std::vector<double>& eta,
                                    const std::vector<double>& zeta,
                                    const DualPoint& dual, double eps) {
  if (eps <= 0) throw InputError("separation oracle needs eps > 0");
  const int n = inst.num_firms();
  const int m = inst.num_workers;

  SeparationOutcome outcome;
  outcome.max_reduced = -kInf;

  struct BestCell {
    int firm = -1;
    int j_star = -1;
    int x = 0;
    long long y = 0;
  } best_cell;
  bool best_is_cell = false;

  auto consider_explicit = [&](int firm, const std::vector<int>& members, double lhs,
                               double rhs) {
    double reduced = rhs - lhs;
    if (reduced > outcome.max_reduced) {
      outcome.max_reduced = reduced;
      if (reduced > kViolationTol) {
        MasterColumn col;
        col.firm = firm;
        col.workers = members;
        col.coeff = rhs;
        outcome.violated = std::move(col);
        outcome.violated_lhs = lhs;
        best_is_cell = false;
      }
    }
  };

  for (int i = 0; i < n; ++i) {
    if (eta[i] == 0.0) {
      // Zero-weight firm: the constraint is linear in the workers, so sorted
      // prefixes of alpha_j - zeta_j ln w_j(i) dominate all sets of each size.
      std::vector<std::pair<double, int>> keys;
      for (int j = 0; j < m; ++j) {
        double term = zeta_log_term(inst.worker_values[j][i], zeta[j]);
        if (term == -kInf) continue;
        keys.push_back({dual.alpha[j] - term, j});
      }
      std::sort(keys.begin(), keys.end());
      std::vector<int> prefix;
      double lhs = dual.beta[i];
      double rhs = 0.0;
      consider_explicit(i, prefix, lhs, rhs);  // empty set: violated iff beta_i < 0
      int limit = std::min<int>(inst.capacities[i], static_cast<int>(keys.size()));
      for (int t = 0; t < limit; ++t) {
        int j = keys[t].second;
        prefix.push_back(j);
        lhs += dual.alpha[j];
        rhs += zeta_log_term(inst.worker_values[j][i], zeta[j]);
        std::vector<int> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        consider_explicit(i, sorted, lhs, rhs);
      }
      continue;
    }

    if (inst.firm_valuations[i].kind() != Valuation::Kind::kAdditive) {
      throw InputError("separation oracle needs additive firm valuations");
    }
    const auto& values = inst.firm_valuations[i].item_values();

    // Positively weighted firm: for every guess of the most valuable member
    // j*, scale values to integers and DP over (size, scaled value) cells.
    for (int j_star = 0; j_star < m; ++j_star) {
      const Rational& v_star = values[j_star];
      if (v_star.is_zero()) continue;
      double star_term = zeta_log_term(inst.worker_values[j_star][i], zeta[j_star]);
      if (star_term == -kInf) continue;
      double alpha_star = (dual.alpha[j_star] - star_term) / eta[i];

      // K = ceil(2m/eps): flooring v-hat loses < v*/K per item, at most
      // v* m/K <= v(S') eps/2 per set, which the relaxed guarantee absorbs.
      const long long k_scale = static_cast<long long>(std::ceil(2.0 * m / eps));
      std::vector<int> items;
      std::vector<long long> scaled;
      std::vector<double> alpha_prime;
      std::vector<double> true_values;
      long long value_cap = k_scale;
      for (int j = 0; j < m; ++j) {
        if (j == j_star || values[j] > v_star) continue;
        double term = zeta_log_term(inst.worker_values[j][i], zeta[j]);
        if (term == -kInf) continue;
        BigInt num = BigInt(k_scale) * values[j].numerator() * v_star.denominator();
        BigInt den = values[j].denominator() * v_star.numerator();
        long long vhat = BigInt(num / den).convert_to<long long>();
        items.push_back(j);
        scaled.push_back(vhat);
        alpha_prime.push_back((dual.alpha[j] - term) / eta[i]);
        true_values.push_back(values[j].to_double());
        value_cap += vhat;
      }
      int max_count = std::min<int>(inst.capacities[i], 1 + static_cast<int>(items.size()));
      KnapsackTable table =
          knapsack_min_alpha_table(j_star, k_scale, alpha_star, v_star.to_double(), items,
                                   scaled, alpha_prime, true_values, max_count, value_cap);

      const double beta_over_eta = dual.beta[i] / eta[i];
      bool improved = false;
      for (int x = 1; x <= max_count; ++x) {
        for (long long y = k_scale; y <= value_cap; ++y) {
          double alpha_sum = table.min_alpha[x][y];
          if (alpha_sum == kInf) continue;
          double reduced =
              eta[i] * (std::log(table.value_sum[x][y]) - alpha_sum - beta_over_eta);
          if (reduced > outcome.max_reduced) {
            outcome.max_reduced = reduced;
            if (reduced > kViolationTol) {
              best_cell = {i, j_star, x, y};
              best_is_cell = true;
              improved = true;
            }
          }
        }
      }
      if (improved) {
        // Materialize while the table is alive; a later cell may replace it.
        std::vector<int> members = table.reconstruct(best_cell.x, best_cell.y);
        double lhs = dual.beta[i];
        for (int j : members) lhs += dual.alpha[j];
        MasterColumn col;
        col.firm = i;
        col.workers = std::move(members);
        col.coeff = column_coefficient(inst, eta, zeta, i, col.workers);
        outcome.violated = std::move(col);
        outcome.violated_lhs = lhs;
      }
    }
  }
  return outcome;
}

}  // namespace nswopt
