#include "two_sided_solver.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kCertificateTolerance = 1e-7;
constexpr long long kPtasStateCap = 100000000;  // 1e8

}  // namespace

TwoSidedNetwork build_network(const TwoSidedInstance& inst) {
  inst.validate();
  const int n = inst.num_firms();
  const int m = inst.num_workers;

  TwoSidedNetwork network;
  network.num_firms = n;
  network.num_workers = m;
  network.net.num_nodes = 2 + m + 2 * n;
  network.net.source = 0;
  network.net.sink = 1 + m + 2 * n;

  auto& edges = network.net.edges;
  for (int j = 0; j < m; ++j) {
    edges.push_back({0, network.worker_node(j), 1, 1, 0.0});
  }
  // Deterministic order: worker index, then firm index, main before
  // secondary. Equal-cost optima then resolve reproducibly.
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      const Rational& w = inst.worker_values[j][i];
      if (w.is_zero()) continue;
      Rational v = inst.firm_valuations[i].value_of_item(j);
      if (!v.is_zero()) {
        network.assign_edges.push_back(
            {static_cast<int>(edges.size()), j, i, true});
        edges.push_back({network.worker_node(j), network.main_node(i), 0, 1,
                         -(v * w).ln()});
      }
      network.assign_edges.push_back(
          {static_cast<int>(edges.size()), j, i, false});
      edges.push_back({network.worker_node(j), network.secondary_node(i), 0, 1, -w.ln()});
    }
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({network.main_node(i), network.net.sink, 1, 1, 0.0});
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back(
        {network.secondary_node(i), network.net.sink, 0, inst.capacities[i] - 1LL, 0.0});
  }
  return network;
}

ExtractedMatching extract_matching(const TwoSidedNetwork& network, const FlowResult& flow) {
  if (!flow.feasible) throw InputError("extract_matching needs a feasible flow");
  ExtractedMatching out;
  out.matching.worker_to_firm.assign(network.num_workers, Matching::kUnassigned);
  out.main_worker.assign(network.num_firms, -1);
  for (const auto& edge : network.assign_edges) {
    if (flow.flow[edge.edge_index] != 1) continue;
    out.matching.worker_to_firm[edge.worker] = edge.firm;
    if (edge.main) out.main_worker[edge.firm] = edge.worker;
  }
  return out;
}

Matching arbitrary_feasible_matching(const TwoSidedInstance& inst) {
  Matching mu;
  mu.worker_to_firm.assign(inst.num_workers, Matching::kUnassigned);
  int firm = 0;
  int used = 0;
  for (int j = 0; j < inst.num_workers; ++j) {
    while (used == inst.capacities[firm]) {
      ++firm;
      used = 0;
    }
    mu.worker_to_firm[j] = firm;
    ++used;
  }
  return mu;
}

TwoSidedResult solve_two_sided(const TwoSidedInstance& inst) {
  inst.validate();
  const int n = inst.num_firms();
  const int m = inst.num_workers;

  TwoSidedResult result;
  result.diag.x_ratio = static_cast<double>(m) / n;
  result.diag.bound =
      m > 0 ? std::exp(std::log(result.diag.x_ratio) / (1.0 + result.diag.x_ratio)) : 0.0;

  const std::uint64_t queries_before = inst.total_queries();
  TwoSidedNetwork network = build_network(inst);
  FlowResult flow = solve_min_cost_flow(network.net);
  result.diag.queries = inst.total_queries() - queries_before;
  if (!flow.feasible) {
    // No assignment keeps every factor positive, so the optimum is 0 and any
    // feasible matching meets the guarantee.
    result.diag.zero_welfare = true;
    result.matching = arbitrary_feasible_matching(inst);
    result.diag.nsw = nsw_two_sided(inst, result.matching);
    return result;
  }

  result.diag.flow_cost = flow.cost;
  result.diag.augmentations = flow.augmentations;
  result.diag.certificate_ok =
      residual_optimality_certificate(network.net, flow.flow, kCertificateTolerance);

  ExtractedMatching extracted = extract_matching(network, flow);
  result.matching = std::move(extracted.matching);
  result.main_worker = std::move(extracted.main_worker);

  Rational surrogate(1);
  for (int i = 0; i < n; ++i) {
    surrogate *= inst.firm_valuations[i].value_of_item(result.main_worker[i]);
  }
  for (int j = 0; j < m; ++j) {
    surrogate *= inst.worker_values[j][result.matching.worker_to_firm[j]];
  }
  result.diag.ln_surrogate = surrogate.ln();
  result.diag.surrogate = surrogate.to_double();
  result.diag.nsw = nsw_two_sided(inst, result.matching);
  return result;
}

namespace {

struct PtasSearch {
  const TwoSidedInstance* inst;
  std::vector<int> assignment;
  std::vector<std::vector<int>> loads;
  std::vector<int> best_assignment;
  Rational best_product{-1};
  long long states = 0;

  void recurse(int worker) {
    if (++states > kPtasStateCap) {
      throw ResourceError("PTAS enumeration exceeds the state cap");
    }
    const int n = inst->num_firms();
    const int m = inst->num_workers;
    if (worker == m) {
      Rational product(1);
      for (int i = 0; i < n && !product.is_zero(); ++i) {
        product *= inst->firm_valuations[i].value(loads[i]);
      }
      for (int j = 0; j < m && !product.is_zero(); ++j) {
        product *= inst->worker_values[j][assignment[j]];
      }
      if (product > best_product) {
        best_product = product;
        best_assignment = assignment;
      }
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(loads[i].size()) == inst->capacities[i]) continue;
      assignment[worker] = i;
      loads[i].push_back(worker);
      recurse(worker + 1);
      loads[i].pop_back();
    }
  }
};

}  // namespace

PtasResult solve_two_sided_ptas(const TwoSidedInstance& inst, double eps) {
  if (eps <= 0) throw InputError("PTAS needs eps > 0");
  inst.validate();
  const int n = inst.num_firms();
  const int m = inst.num_workers;

  bool delegate = eps >= 0.33 || static_cast<double>(m) >= n / (eps * eps);
  if (delegate) {
    TwoSidedResult flow = solve_two_sided(inst);
    PtasResult result;
    result.matching = std::move(flow.matching);
    result.nsw = flow.diag.nsw;
    return result;
  }

  if (m * std::log(static_cast<double>(n)) > std::log(static_cast<double>(kPtasStateCap))) {
    throw ResourceError("PTAS enumeration would exceed the state cap");
  }

  PtasSearch search;
  search.inst = &inst;
  search.assignment.assign(m, 0);
  search.loads.assign(n, {});
  search.recurse(0);

  PtasResult result;
  result.used_enumeration = true;
  result.matching.worker_to_firm = std::move(search.best_assignment);
  result.exact_product = search.best_product;
  result.nsw = nsw_two_sided(inst, result.matching);
  return result;
}

}  // namespace nswopt
