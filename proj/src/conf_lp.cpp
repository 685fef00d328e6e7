#include "conf_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "two_sided_solver.hpp"

namespace nswopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedCostTol = 1e-9;

struct SeedOutcome {
  bool feasible = false;  // false <=> every matching has weighted welfare 0
  Matching matching;
};

// Feasibility-and-seed flow: a full matching exists with every positively
// weighted factor nonzero iff this network is feasible. It differs from the
// approximation network in exactly the ways the 0^0 = 1 convention demands:
// zero-weight firms have no forced main copy (their bundle may be empty or
// worthless) and zero-weight workers may go anywhere. Costs bias the seed
// toward high welfare but play no role in feasibility.
SeedOutcome weighted_seed_matching(const TwoSidedInstance& inst,
                                   const std::vector<double>& eta,
                                   const std::vector<double>& zeta) {
  const int n = inst.num_firms();
  const int m = inst.num_workers;
  FlowNetwork net;
  net.num_nodes = 2 + m + 2 * n;
  net.source = 0;
  net.sink = 1 + m + 2 * n;
  auto worker_node = [&](int j) { return 1 + j; };
  auto main_node = [&](int i) { return 1 + m + i; };
  auto secondary_node = [&](int i) { return 1 + m + n + i; };

  struct AssignEdge {
    int edge;
    int worker;
    int firm;
  };
  std::vector<AssignEdge> assign_edges;

  for (int j = 0; j < m; ++j) net.edges.push_back({0, worker_node(j), 1, 1, 0.0});
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      const Rational& w = inst.worker_values[j][i];
      if (zeta[j] > 0.0 && w.is_zero()) continue;  // would zero the objective
      double w_cost = (zeta[j] > 0.0) ? -zeta[j] * w.ln() : 0.0;
      if (eta[i] > 0.0) {
        Rational v = inst.firm_valuations[i].value_of_item(j);
        if (!v.is_zero()) {
          assign_edges.push_back({static_cast<int>(net.edges.size()), j, i});
          net.edges.push_back(
              {worker_node(j), main_node(i), 0, 1, -eta[i] * v.ln() + w_cost});
        }
      }
      assign_edges.push_back({static_cast<int>(net.edges.size()), j, i});
      net.edges.push_back({worker_node(j), secondary_node(i), 0, 1, w_cost});
    }
  }
  for (int i = 0; i < n; ++i) {
    // A positively weighted firm needs at least one positively valued
    // worker; a zero-weight firm has no such requirement.
    long long main_demand = eta[i] > 0.0 ? 1 : 0;
    net.edges.push_back({main_node(i), net.sink, main_demand, main_demand, 0.0});
    net.edges.push_back(
        {secondary_node(i), net.sink, 0, inst.capacities[i] - main_demand, 0.0});
  }

  FlowResult flow = solve_min_cost_flow(net);
  SeedOutcome outcome;
  if (!flow.feasible) return outcome;
  outcome.feasible = true;
  outcome.matching.worker_to_firm.assign(m, Matching::kUnassigned);
  for (const auto& edge : assign_edges) {
    if (flow.flow[edge.edge] == 1) outcome.matching.worker_to_firm[edge.worker] = edge.firm;
  }
  return outcome;
}

struct CgState {
  std::vector<MasterColumn> columns;
  MasterSolution master;
  int oracle_calls = 0;
};

enum class CgStop { kConverged, kTargetReached, kColumnCap };

// Column generation rounds: solve the restricted master, price with the
// separation oracle, add the best violated column while it makes measurable
// progress. At convergence every dual constraint holds up to
// eta_i ln(1+eps/2) plus tolerance, so the master is within ln(1+eps/2) of
// the full LP. `target` (optional) stops a round early once the master
// reaches it.
CgStop run_column_generation(const TwoSidedInstance& inst, const std::vector<double>& eta,
                             const std::vector<double>& zeta, double eps, double target,
                             bool has_target, int column_cap, CgState& state) {
  while (true) {
    state.master = solve_master_lp(inst.num_firms(), inst.num_workers, state.columns);
    if (has_target && state.master.objective >= target) return CgStop::kTargetReached;

    DualPoint dual;
    dual.alpha = state.master.alpha;
    dual.beta = state.master.beta;
    dual.budget = state.master.objective;  // sum(alpha) + sum(beta) by duality
    SeparationOutcome outcome = separation_oracle(inst, eta, zeta, dual, eps);
    ++state.oracle_calls;
    if (outcome.feasible()) return CgStop::kConverged;

    // Recheck against the exactly evaluated coefficient; the cell estimate
    // can be optimistic at the tolerance boundary.
    double exact_reduced = outcome.violated->coeff - outcome.violated_lhs;
    if (exact_reduced <= kReducedCostTol) return CgStop::kConverged;
    if (static_cast<int>(state.columns.size()) >= column_cap) return CgStop::kColumnCap;
    state.columns.push_back(std::move(*outcome.violated));
  }
}

}  // namespace

ConfLpResult solve_conf_lp(const TwoSidedInstance& inst, double eps, int column_cap) {
  if (eps <= 0) throw InputError("solve_conf_lp needs eps > 0");
  inst.validate();
  if (!inst.weights) throw InputError("solve_conf_lp needs instance weights");
  for (const auto& v : inst.firm_valuations) {
    if (v.kind() != Valuation::Kind::kAdditive) {
      throw InputError("solve_conf_lp needs additive firm valuations");
    }
  }
  const int n = inst.num_firms();
  const int m = inst.num_workers;
  std::vector<double> eta(n), zeta(m);
  for (int i = 0; i < n; ++i) eta[i] = inst.weights->firms[i].to_double();
  for (int j = 0; j < m; ++j) zeta[j] = inst.weights->workers[j].to_double();

  ConfLpResult result;

  SeedOutcome seed = weighted_seed_matching(inst, eta, zeta);
  if (!seed.feasible) {
    result.status = ConfLpStatus::kZeroOptimum;
    result.objective = -kInf;
    result.fallback = arbitrary_feasible_matching(inst);
    return result;
  }
  result.fallback = seed.matching;

  // Worker-disjoint integral seed, one column per firm in firm order.
  CgState state;
  auto seed_loads = seed.matching.firm_loads(n);
  double seed_value = 0.0;
  for (int i = 0; i < n; ++i) {
    MasterColumn col;
    col.firm = i;
    col.workers = seed_loads[i];
    col.coeff = column_coefficient(inst, eta, zeta, i, col.workers);
    if (col.coeff == -kInf) throw InputError("seed matching has a zero-value factor");
    seed_value += col.coeff;
    state.columns.push_back(std::move(col));
  }

  // The flow matching is an O(m)-approximation of the LP optimum, so the
  // optimum lies in [lnA, lnA + ln(2m)]; binary search the budget o with a
  // fixed O(log(m/eps)) step count, running column generation per guess.
  const double slack = std::log1p(eps / 2.0);
  double lo = seed_value;
  double hi = seed_value + std::log(std::max(2, 2 * m));
  const double width_goal = std::max(1e-12, std::log1p(eps) / 3.0);
  const int steps =
      static_cast<int>(std::ceil(std::log2(std::max(2.0, (hi - lo) / width_goal)))) + 1;
  bool capped = false;
  for (int step = 0; step < steps && hi - lo > width_goal && !capped; ++step) {
    double o = 0.5 * (lo + hi);
    ++result.guesses;
    CgStop stop = run_column_generation(inst, eta, zeta, eps, o - slack, true,
                                        column_cap, state);
    switch (stop) {
      case CgStop::kTargetReached:
        // The optimum is at least the master value, hence at least o - slack.
        lo = std::min(hi, std::max(lo, o - slack));
        break;
      case CgStop::kConverged:
        lo = std::max(lo, state.master.objective);
        hi = std::min(hi, std::max(lo, state.master.objective + slack + 1e-9));
        break;
      case CgStop::kColumnCap:
        capped = true;
        break;
    }
  }
  // Final polish without a target so the run ends feasible or stuck.
  if (!capped) {
    CgStop stop = run_column_generation(inst, eta, zeta, eps, 0.0, false, column_cap, state);
    if (stop == CgStop::kColumnCap) capped = true;
  }

  result.status = capped ? ConfLpStatus::kColumnCap : ConfLpStatus::kOk;
  result.columns = std::move(state.columns);
  result.y = state.master.y;
  result.objective = state.master.objective;
  result.alpha = state.master.alpha;
  result.beta = state.master.beta;
  result.oracle_calls = state.oracle_calls;
  result.x.assign(n, std::vector<double>(m, 0.0));
  for (size_t k = 0; k < result.columns.size(); ++k) {
    double weight = result.y[k];
    if (weight <= 0.0) continue;
    for (int j : result.columns[k].workers) {
      result.x[result.columns[k].firm][j] += weight;
    }
  }
  for (auto& row : result.x) {
    for (double& value : row) value = std::clamp(value, 0.0, 1.0);
  }
  return result;
}

}  // namespace nswopt
