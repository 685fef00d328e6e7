#include "one_sided_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

#include "assignment.hpp"
#include "errors.hpp"

namespace nswopt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Any exact-capacity allocation; used when the optimum is provably 0.
std::vector<std::vector<int>> sequential_fill(const OneSidedInstance& inst) {
  std::vector<std::vector<int>> bundles(inst.num_agents());
  int next = 0;
  for (int i = 0; i < inst.num_agents(); ++i) {
    for (int c = 0; c < inst.capacities[i]; ++c) bundles[i].push_back(next++);
  }
  return bundles;
}

Allocation strip_dummies(const std::vector<std::vector<int>>& bundles, int original_items) {
  Allocation alloc;
  alloc.bundles.resize(bundles.size());
  for (size_t i = 0; i < bundles.size(); ++i) {
    for (int j : bundles[i]) {
      if (j < original_items) alloc.bundles[i].push_back(j);
    }
    std::sort(alloc.bundles[i].begin(), alloc.bundles[i].end());
  }
  return alloc;
}

}  // namespace

ExactCapacitatedReduction to_exact_capacitated(const OneSidedInstance& inst) {
  inst.validate();
  ExactCapacitatedReduction red;
  red.original_items = inst.num_items;
  red.instance = inst;
  int target = inst.capacity_sum();
  if (inst.num_items < target) {
    red.instance.num_items = target;
    for (auto& v : red.instance.valuations) v = v.zero_extended(target);
  }
  return red;
}

Allocation rematch(const OneSidedInstance& inst,
                   const std::vector<std::vector<int>>& bundles,
                   const std::vector<int>& phase1_items) {
  const int n = inst.num_agents();
  if (static_cast<int>(phase1_items.size()) != n) {
    throw InputError("rematch needs exactly one phase-1 item per agent");
  }
  std::vector<std::vector<Rational>> weights(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> augmented = bundles[i];
    augmented.push_back(-1);
    for (int h = 0; h < n; ++h) {
      augmented.back() = phase1_items[h];
      weights[i][h] = inst.valuations[i].value(augmented);
    }
  }
  ProductMatching delta = max_product_matching(weights);
  Allocation alloc;
  alloc.bundles.resize(n);
  for (int i = 0; i < n; ++i) {
    alloc.bundles[i] = bundles[i];
    alloc.bundles[i].push_back(phase1_items[delta.agent_to_item[i]]);
    std::sort(alloc.bundles[i].begin(), alloc.bundles[i].end());
  }
  return alloc;
}

OneSidedRun solve_one_sided_run(const OneSidedInstance& inst, double eps) {
  if (eps <= 0) throw InputError("solve_one_sided needs eps > 0");
  // The analysis loses a factor 6(1+eps'); running with eps' = eps/6 lands
  // the end-to-end ratio at 6+eps.
  const double inner_eps = eps / 6.0;

  OneSidedRun run;
  ExactCapacitatedReduction red = to_exact_capacitated(inst);
  auto exact = std::make_shared<OneSidedInstance>(std::move(red.instance));
  exact->reset_queries();
  run.exact_instance = exact;
  OneSidedDiagnostics& diag = run.result.diag;
  diag.exact_items = exact->num_items;

  const int n = exact->num_agents();
  const int m = exact->num_items;

  // Phase 1: maximum-product one-to-one matching.
  auto t0 = Clock::now();
  std::vector<std::vector<Rational>> singles(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) singles[i][j] = exact->valuations[i].value_of_item(j);
  }
  ProductMatching tau = max_product_matching(singles);
  diag.phase_ms[0] = ms_since(t0);

  if (tau.zero_product) {
    // Every one-to-one matching hits a zero value; by subadditivity the
    // optimal welfare is 0 and any feasible completion is acceptable.
    diag.zero_welfare = true;
    run.result.allocation = strip_dummies(sequential_fill(*exact), red.original_items);
    diag.queries = exact->total_queries();
    diag.nsw = nsw_one_sided(inst, run.result.allocation);
    return run;
  }

  run.phase1_items.resize(n);
  std::vector<char> matched(m, 0);
  for (int i = 0; i < n; ++i) {
    run.phase1_items[i] = tau.agent_to_item[i];
    matched[tau.agent_to_item[i]] = 1;
  }
  std::vector<int> pool;
  pool.reserve(m - n);
  for (int j = 0; j < m; ++j) {
    if (!matched[j]) pool.push_back(j);
  }

  // Phase 2: local search over the unmatched items.
  auto t1 = Clock::now();
  run.state = local_search(*exact, std::move(pool), inner_eps);
  diag.phase_ms[1] = ms_since(t1);
  diag.swaps = run.state.swaps;
  diag.iterations_bound = run.state.iteration_bound;
  diag.eps_bar = run.state.eps_bar;
  diag.eps_hat = run.state.eps_hat;

  // Phase 3: rematch the phase-1 items onto the local-search bundles.
  auto t2 = Clock::now();
  Allocation exact_alloc = rematch(*exact, run.state.bundles, run.phase1_items);
  diag.phase_ms[2] = ms_since(t2);

  diag.queries = exact->total_queries();
  run.result.allocation = strip_dummies(exact_alloc.bundles, red.original_items);
  diag.nsw = nsw_one_sided(inst, run.result.allocation);
  return run;
}

OneSidedResult solve_one_sided(const OneSidedInstance& inst, double eps) {
  return solve_one_sided_run(inst, eps).result;
}

double ef1_gamma(const OneSidedInstance& inst, const Allocation& alloc) {
  alloc.validate(inst);
  const int n = inst.num_agents();
  double gamma = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    Rational own = inst.valuations[i].value(alloc.bundles[i]);
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const auto& other = alloc.bundles[k];
      const int sz = static_cast<int>(other.size());
      if (sz > 20) throw InputError("ef1_gamma is exhaustive; bundles must be small");
      for (uint32_t mask = 1; mask < (uint32_t{1} << sz); ++mask) {
        if (std::popcount(mask) > inst.capacities[i]) continue;
        std::vector<int> subset;
        for (int t = 0; t < sz; ++t) {
          if (mask & (uint32_t{1} << t)) subset.push_back(other[t]);
        }
        // The weakest requirement drops the item whose removal hurts most.
        Rational weakest(-1);
        for (size_t drop = 0; drop < subset.size(); ++drop) {
          std::vector<int> rest = subset;
          rest.erase(rest.begin() + drop);
          Rational rem = inst.valuations[i].value(rest);
          if (weakest < Rational(0) || rem < weakest) weakest = rem;
        }
        if (weakest.is_zero()) continue;  // satisfied for every gamma
        gamma = std::min(gamma, (own / weakest).to_double());
      }
    }
  }
  return gamma;
}

}  // namespace nswopt
