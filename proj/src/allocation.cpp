#include "allocation.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

void check_weight_vectors(const TwoSidedInstance& inst,
                          const std::vector<Rational>& firm_weights,
                          const std::vector<Rational>& worker_weights) {
  if (static_cast<int>(firm_weights.size()) != inst.num_firms() ||
      static_cast<int>(worker_weights.size()) != inst.num_workers) {
    throw InputError("weight vectors must cover every firm and worker");
  }
  Rational sum;
  for (const auto& w : firm_weights) {
    if (w.is_negative()) throw InputError("weights must be nonnegative");
    sum += w;
  }
  for (const auto& w : worker_weights) {
    if (w.is_negative()) throw InputError("weights must be nonnegative");
    sum += w;
  }
  if (std::abs((sum - Rational(1)).to_double()) > kWeightSumTolerance) {
    throw InputError("weights must sum to 1");
  }
}

}  // namespace

void Allocation::validate(const OneSidedInstance& inst) const {
  if (static_cast<int>(bundles.size()) != inst.num_agents()) {
    throw InputError("allocation must have one bundle per agent");
  }
  std::vector<char> seen(inst.num_items, 0);
  for (const auto& bundle : bundles) {
    for (int j : bundle) {
      if (j < 0 || j >= inst.num_items) throw InputError("allocation item out of range");
      if (seen[j]) throw InputError("allocation bundles must be disjoint");
      seen[j] = 1;
    }
  }
}

bool Allocation::is_feasible(const OneSidedInstance& inst) const {
  if (static_cast<int>(bundles.size()) != inst.num_agents()) return false;
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (static_cast<int>(bundles[i].size()) > inst.capacities[i]) return false;
  }
  return true;
}

std::vector<std::vector<int>> Matching::firm_loads(int num_firms) const {
  std::vector<std::vector<int>> loads(num_firms);
  for (int j = 0; j < static_cast<int>(worker_to_firm.size()); ++j) {
    int i = worker_to_firm[j];
    if (i != kUnassigned) loads[i].push_back(j);
  }
  return loads;
}

void Matching::validate(const TwoSidedInstance& inst) const {
  if (static_cast<int>(worker_to_firm.size()) != inst.num_workers) {
    throw InputError("matching must cover every worker");
  }
  std::vector<int> load(inst.num_firms(), 0);
  for (int i : worker_to_firm) {
    if (i == kUnassigned) continue;
    if (i < 0 || i >= inst.num_firms()) throw InputError("matching firm out of range");
    if (++load[i] > inst.capacities[i]) {
      throw InputError("matching exceeds a firm capacity");
    }
  }
}

bool Matching::is_fully_assigned() const {
  for (int i : worker_to_firm) {
    if (i == kUnassigned) return false;
  }
  return true;
}

double nsw_one_sided(const OneSidedInstance& inst, const Allocation& alloc) {
  alloc.validate(inst);
  double log_sum = 0.0;
  for (int i = 0; i < inst.num_agents(); ++i) {
    Rational u = inst.valuations[i].value(alloc.bundles[i]);
    if (u.is_zero()) return 0.0;
    log_sum += u.ln();
  }
  return std::exp(log_sum / inst.num_agents());
}

double nsw_two_sided(const TwoSidedInstance& inst, const Matching& mu) {
  mu.validate(inst);
  const int n = inst.num_firms();
  const int m = inst.num_workers;
  double log_sum = 0.0;
  auto loads = mu.firm_loads(n);
  for (int i = 0; i < n; ++i) {
    Rational u = inst.firm_valuations[i].value(loads[i]);
    if (u.is_zero()) return 0.0;
    log_sum += u.ln();
  }
  for (int j = 0; j < m; ++j) {
    int i = mu.worker_to_firm[j];
    if (i == Matching::kUnassigned) return 0.0;
    const Rational& u = inst.worker_values[j][i];
    if (u.is_zero()) return 0.0;
    log_sum += u.ln();
  }
  return std::exp(log_sum / (m + n));
}

double log_nsw_weighted(const TwoSidedInstance& inst, const Matching& mu,
                        const std::vector<Rational>& firm_weights,
                        const std::vector<Rational>& worker_weights) {
  mu.validate(inst);
  check_weight_vectors(inst, firm_weights, worker_weights);
  double log_sum = 0.0;
  auto loads = mu.firm_loads(inst.num_firms());
  for (int i = 0; i < inst.num_firms(); ++i) {
    if (firm_weights[i].is_zero()) continue;  // 0^0 = 1
    Rational u = inst.firm_valuations[i].value(loads[i]);
    if (u.is_zero()) return -std::numeric_limits<double>::infinity();
    log_sum += firm_weights[i].to_double() * u.ln();
  }
  for (int j = 0; j < inst.num_workers; ++j) {
    if (worker_weights[j].is_zero()) continue;
    int i = mu.worker_to_firm[j];
    if (i == Matching::kUnassigned) return -std::numeric_limits<double>::infinity();
    const Rational& u = inst.worker_values[j][i];
    if (u.is_zero()) return -std::numeric_limits<double>::infinity();
    log_sum += worker_weights[j].to_double() * u.ln();
  }
  return log_sum;
}

double nsw_weighted(const TwoSidedInstance& inst, const Matching& mu,
                    const std::vector<Rational>& firm_weights,
                    const std::vector<Rational>& worker_weights) {
  double log_value = log_nsw_weighted(inst, mu, firm_weights, worker_weights);
  return std::isinf(log_value) ? 0.0 : std::exp(log_value);
}

Rational utility_product_one_sided(const OneSidedInstance& inst, const Allocation& alloc) {
  alloc.validate(inst);
  Rational product(1);
  for (int i = 0; i < inst.num_agents(); ++i) {
    product *= inst.valuations[i].value(alloc.bundles[i]);
    if (product.is_zero()) return product;
  }
  return product;
}

Rational utility_product_two_sided(const TwoSidedInstance& inst, const Matching& mu) {
  mu.validate(inst);
  Rational product(1);
  auto loads = mu.firm_loads(inst.num_firms());
  for (int i = 0; i < inst.num_firms(); ++i) {
    product *= inst.firm_valuations[i].value(loads[i]);
    if (product.is_zero()) return product;
  }
  for (int j = 0; j < inst.num_workers; ++j) {
    int i = mu.worker_to_firm[j];
    if (i == Matching::kUnassigned) return Rational(0);
    product *= inst.worker_values[j][i];
    if (product.is_zero()) return product;
  }
  return product;
}

}  // namespace nswopt
