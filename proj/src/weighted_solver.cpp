#include "weighted_solver.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "rounding.hpp"
#include "two_sided_solver.hpp"

namespace nswopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

WeightedResult solve_weighted(const TwoSidedInstance& inst, double eps, int trials,
                              std::uint64_t seed) {
  if (trials < 1) throw InputError("solve_weighted needs trials >= 1");
  WeightedResult result;
  ConfLpResult lp = solve_conf_lp(inst, eps);
  result.diag.lp_status = lp.status;
  result.diag.lp_objective = lp.objective;
  result.diag.columns = static_cast<int>(lp.columns.size());
  result.diag.oracle_calls = lp.oracle_calls;

  const auto& firm_weights = inst.weights->firms;
  const auto& worker_weights = inst.weights->workers;

  if (lp.status == ConfLpStatus::kZeroOptimum) {
    result.matching = lp.fallback;
    result.diag.best_ln_nsw = -kInf;
    result.diag.floor_bound = -kInf;
    result.diag.nsw = nsw_weighted(inst, result.matching, firm_weights, worker_weights);
    return result;
  }

  double eta_sum = 0.0;
  for (const auto& w : firm_weights) eta_sum += w.to_double();
  result.diag.floor_bound = lp.objective - eta_sum / std::exp(1.0);
  result.x = lp.x;

  result.diag.best_ln_nsw = -kInf;
  result.matching = lp.fallback;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    Matching mu = dependent_rounding(lp.x, rng);
    double ln_nsw = log_nsw_weighted(inst, mu, firm_weights, worker_weights);
    result.diag.trials.push_back({trial_seed, ln_nsw});
    if (t == 0 || ln_nsw > result.diag.best_ln_nsw) {
      result.diag.best_ln_nsw = ln_nsw;
      result.matching = std::move(mu);
    }
  }
  if (std::isinf(result.diag.best_ln_nsw)) {
    // Degenerate run: every draw zeroed some positively weighted factor.
    // The integral seed is feasible with positive welfare; return it.
    double seed_ln = log_nsw_weighted(inst, lp.fallback, firm_weights, worker_weights);
    if (seed_ln > result.diag.best_ln_nsw) {
      result.diag.used_seed_fallback = true;
      result.diag.best_ln_nsw = seed_ln;
      result.matching = lp.fallback;
    }
  }
  result.diag.nsw =
      std::isinf(result.diag.best_ln_nsw) ? 0.0 : std::exp(result.diag.best_ln_nsw);
  return result;
}

CombinedResult solve_unweighted_best(const TwoSidedInstance& inst, double eps, int trials,
                                     std::uint64_t seed) {
  inst.validate();
  const int n = inst.num_firms();
  const int m = inst.num_workers;

  CombinedResult result;
  double x_ratio = static_cast<double>(m) / n;
  if (m > 0) {
    double flow_bound = std::exp(std::log(x_ratio) / (1.0 + x_ratio));
    double lp_bound = std::exp(1.0 / (std::exp(1.0) * (x_ratio + 1.0)) + eps);
    result.bound = std::min(flow_bound, lp_bound);
  }

  TwoSidedResult flow = solve_two_sided(inst);
  result.flow_nsw = flow.diag.nsw;

  TwoSidedInstance uniform = inst;
  NswWeights weights;
  weights.firms.assign(n, Rational(1, m + n));
  weights.workers.assign(m, Rational(1, m + n));
  uniform.weights = std::move(weights);
  WeightedResult weighted = solve_weighted(uniform, eps, trials, seed);
  result.weighted_nsw = nsw_two_sided(inst, weighted.matching);

  if (result.flow_nsw >= result.weighted_nsw) {
    result.branch = "flow";
    result.matching = std::move(flow.matching);
    result.nsw = result.flow_nsw;
  } else {
    result.branch = "rounding";
    result.matching = std::move(weighted.matching);
    result.nsw = result.weighted_nsw;
  }
  return result;
}

}  // namespace nswopt
