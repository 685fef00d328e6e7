#include "brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace nswopt {

namespace {

using Int128 = __int128;

long long budget_or_default(long long budget) {
  return budget > 0 ? budget : default_enumeration_budget();
}

void tick(long long& states, long long budget) {
  if (++states > budget) {
    throw ResourceError("enumeration budget exceeded (" + std::to_string(budget) +
                        " states); raise NSWOPT_BUDGET for larger instances");
  }
}

// Integer view of one agent's valuation: all payload rationals scaled by the
// lcm of their denominators, so bundle utilities are plain integers.
struct ScaledValuation {
  const Valuation* v = nullptr;
  BigInt scale = 1;
  std::vector<long long> values;   // additive / capped / coverage weights / table
  std::vector<uint32_t> set_mask;  // coverage: element set per item
  bool fits = true;                // payload fits in long long after scaling

  long long max_utility(int cap) const;
  long long utility(const std::vector<int>& bundle) const;
};

ScaledValuation scale_valuation(const Valuation& v) {
  ScaledValuation scaled;
  scaled.v = &v;
  const std::vector<Rational>* payload = nullptr;
  switch (v.kind()) {
    case Valuation::Kind::kAdditive:
    case Valuation::Kind::kCappedAdditive:
      payload = &v.item_values();
      break;
    case Valuation::Kind::kWeightedCoverage:
      payload = &v.element_weights();
      break;
    case Valuation::Kind::kExplicitTable:
      payload = &v.table();
      break;
  }
  BigInt lcm = 1;
  for (const auto& r : *payload) lcm = boost::multiprecision::lcm(lcm, r.denominator());
  scaled.scale = lcm;
  // Headroom so bundle sums (up to ~64 terms) stay inside long long.
  static const BigInt kMax = BigInt(1LL << 43);
  for (const auto& r : *payload) {
    BigInt scaled_value = r.numerator() * (lcm / r.denominator());
    if (scaled_value > kMax) {
      scaled.fits = false;
      break;
    }
    scaled.values.push_back(scaled_value.convert_to<long long>());
  }
  if (v.kind() == Valuation::Kind::kWeightedCoverage && scaled.fits) {
    if (v.coverage_universe() > 31) {
      scaled.fits = false;
    } else {
      for (const auto& set : v.item_sets()) {
        uint32_t mask = 0;
        for (int e : set) mask |= uint32_t{1} << e;
        scaled.set_mask.push_back(mask);
      }
    }
  }
  return scaled;
}

long long ScaledValuation::utility(const std::vector<int>& bundle) const {
  switch (v->kind()) {
    case Valuation::Kind::kAdditive: {
      long long total = 0;
      for (int j : bundle) total += values[j];
      return total;
    }
    case Valuation::Kind::kCappedAdditive: {
      int cap = v->cap();
      if (static_cast<int>(bundle.size()) <= cap) {
        long long total = 0;
        for (int j : bundle) total += values[j];
        return total;
      }
      // Bundles stay tiny at oracle scale; sort a copy.
      std::vector<long long> picked;
      picked.reserve(bundle.size());
      for (int j : bundle) picked.push_back(values[j]);
      std::sort(picked.rbegin(), picked.rend());
      long long total = 0;
      for (int t = 0; t < cap; ++t) total += picked[t];
      return total;
    }
    case Valuation::Kind::kWeightedCoverage: {
      uint32_t mask = 0;
      for (int j : bundle) mask |= set_mask[j];
      long long total = 0;
      while (mask) {
        int e = std::countr_zero(mask);
        total += values[e];
        mask &= mask - 1;
      }
      return total;
    }
    case Valuation::Kind::kExplicitTable: {
      uint32_t mask = 0;
      for (int j : bundle) {
        if (j < v->table_items()) mask |= uint32_t{1} << j;
      }
      return values[mask];
    }
  }
  return 0;
}

long long ScaledValuation::max_utility(int cap) const {
  // Upper bound on any bundle utility under the capacity, for overflow
  // screening only.
  switch (v->kind()) {
    case Valuation::Kind::kAdditive:
    case Valuation::Kind::kCappedAdditive: {
      std::vector<long long> sorted = values;
      std::sort(sorted.rbegin(), sorted.rend());
      int take = std::min<int>(cap, static_cast<int>(sorted.size()));
      if (v->kind() == Valuation::Kind::kCappedAdditive) take = std::min(take, v->cap());
      long long total = 0;
      for (int t = 0; t < take; ++t) total += sorted[t];
      return total;
    }
    case Valuation::Kind::kWeightedCoverage:
      return std::accumulate(values.begin(), values.end(), 0LL);
    case Valuation::Kind::kExplicitTable:
      return *std::max_element(values.begin(), values.end());
  }
  return 0;
}

// Fast path: all utilities fit in long long and their product fits in
// __int128 with headroom.
struct FastOneSided {
  const OneSidedInstance* inst;
  std::vector<ScaledValuation> scaled;
  std::vector<std::vector<int>> bundles;
  std::vector<int> labels;       // per item: agent or n for "out"
  std::vector<int> best_labels;
  bool has_best = false;
  Int128 best_product = -1;
  long long states = 0;
  long long budget = 0;

  void recurse(int item) {
    tick(states, budget);
    const int n = inst->num_agents();
    if (item == inst->num_items) {
      Int128 product = 1;
      for (int i = 0; i < n; ++i) {
        long long u = scaled[i].utility(bundles[i]);
        if (u == 0) {
          product = 0;
          break;
        }
        product *= u;
      }
      if (!has_best || product > best_product) {
        has_best = true;
        best_product = product;
        best_labels = labels;
      }
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(bundles[i].size()) == inst->capacities[i]) continue;
      labels[item] = i;
      bundles[i].push_back(item);
      recurse(item + 1);
      bundles[i].pop_back();
    }
    labels[item] = n;  // leave the item out
    recurse(item + 1);
  }
};

// Fallback for oversized payloads: same recursion with exact rationals.
struct SlowOneSided {
  const OneSidedInstance* inst;
  std::vector<std::vector<int>> bundles;
  std::vector<int> labels;
  std::vector<int> best_labels;
  bool has_best = false;
  Rational best_product{-1};
  long long states = 0;
  long long budget = 0;

  void recurse(int item) {
    tick(states, budget);
    const int n = inst->num_agents();
    if (item == inst->num_items) {
      Rational product(1);
      for (int i = 0; i < n && !product.is_zero(); ++i) {
        product *= inst->valuations[i].value(bundles[i]);
      }
      if (!has_best || product > best_product) {
        has_best = true;
        best_product = product;
        best_labels = labels;
      }
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(bundles[i].size()) == inst->capacities[i]) continue;
      labels[item] = i;
      bundles[i].push_back(item);
      recurse(item + 1);
      bundles[i].pop_back();
    }
    labels[item] = n;
    recurse(item + 1);
  }
};

Allocation allocation_from_labels(const std::vector<int>& labels, int num_agents) {
  Allocation alloc;
  alloc.bundles.resize(num_agents);
  for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
    if (labels[j] < num_agents) alloc.bundles[labels[j]].push_back(j);
  }
  return alloc;
}

}  // namespace

long long default_enumeration_budget() {
  if (const char* env = std::getenv("NSWOPT_BUDGET")) {
    char* end = nullptr;
    long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    throw InputError("NSWOPT_BUDGET must be a positive integer");
  }
  return 10000000;  // 1e7
}

ExactOneSidedResult exact_one_sided(const OneSidedInstance& inst, long long budget) {
  inst.validate();
  budget = budget_or_default(budget);
  const int n = inst.num_agents();

  std::vector<ScaledValuation> scaled;
  bool fast = true;
  for (int i = 0; i < n; ++i) {
    scaled.push_back(scale_valuation(inst.valuations[i]));
    fast = fast && scaled.back().fits;
  }
  if (fast) {
    // Product overflow screen: prod of per-agent maxima must fit in
    // __int128 with room to spare.
    long double bound = 1.0L;
    for (int i = 0; i < n; ++i) {
      bound *= static_cast<long double>(std::max(1LL, scaled[i].max_utility(inst.capacities[i])));
    }
    if (bound > 1e36L) fast = false;
  }

  ExactOneSidedResult result;
  std::vector<int> best_labels;
  if (fast) {
    FastOneSided search;
    search.inst = &inst;
    search.scaled = std::move(scaled);
    search.bundles.assign(n, {});
    search.labels.assign(inst.num_items, n);
    search.budget = budget;
    search.recurse(0);
    result.states = search.states;
    best_labels = std::move(search.best_labels);
    // Undo the per-agent scaling: true product = scaled product / prod(scale).
    BigInt numerator = 0;
    bool negative = search.best_product < 0;
    Int128 magnitude = negative ? -search.best_product : search.best_product;
    numerator = BigInt(static_cast<unsigned long long>(magnitude >> 64));
    numerator <<= 64;
    numerator += BigInt(static_cast<unsigned long long>(magnitude));
    BigInt denominator = 1;
    for (const auto& s : search.scaled) denominator *= s.scale;
    result.product = Rational(BigRat(numerator, denominator));
  } else {
    SlowOneSided search;
    search.inst = &inst;
    search.bundles.assign(n, {});
    search.labels.assign(inst.num_items, n);
    search.budget = budget;
    search.recurse(0);
    result.states = search.states;
    best_labels = std::move(search.best_labels);
    result.product = search.best_product;
  }
  result.allocation = allocation_from_labels(best_labels, n);
  result.nsw = result.product.is_zero() ? 0.0 : std::exp(result.product.ln() / n);
  return result;
}

namespace {

struct TwoSidedSearch {
  const TwoSidedInstance* inst;
  std::vector<std::vector<int>> loads;
  std::vector<int> assignment;
  std::vector<int> best_assignment;
  bool has_best = false;
  Rational best_product{-1};
  long long states = 0;
  long long budget = 0;

  void recurse(int worker) {
    tick(states, budget);
    const int n = inst->num_firms();
    if (worker == inst->num_workers) {
      Rational product(1);
      for (int i = 0; i < n && !product.is_zero(); ++i) {
        product *= inst->firm_valuations[i].value(loads[i]);
      }
      for (int j = 0; j < inst->num_workers && !product.is_zero(); ++j) {
        product *= inst->worker_values[j][assignment[j]];
      }
      if (!has_best || product > best_product) {
        has_best = true;
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

struct WeightedSearch {
  const TwoSidedInstance* inst;
  std::vector<double> eta, zeta;
  std::vector<std::vector<int>> loads;
  std::vector<int> assignment;
  std::vector<int> best_assignment;
  bool has_best = false;
  double best_log = -std::numeric_limits<double>::infinity();
  long long states = 0;
  long long budget = 0;

  void recurse(int worker) {
    tick(states, budget);
    const int n = inst->num_firms();
    if (worker == inst->num_workers) {
      double log_sum = 0.0;
      for (int i = 0; i < n; ++i) {
        if (eta[i] == 0.0) continue;
        Rational u = inst->firm_valuations[i].value(loads[i]);
        if (u.is_zero()) {
          log_sum = -std::numeric_limits<double>::infinity();
          break;
        }
        log_sum += eta[i] * u.ln();
      }
      if (!std::isinf(log_sum)) {
        for (int j = 0; j < inst->num_workers; ++j) {
          if (zeta[j] == 0.0) continue;
          const Rational& u = inst->worker_values[j][assignment[j]];
          if (u.is_zero()) {
            log_sum = -std::numeric_limits<double>::infinity();
            break;
          }
          log_sum += zeta[j] * u.ln();
        }
      }
      if (!has_best || log_sum > best_log + 1e-12) {
        has_best = true;
        best_log = log_sum;
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

ExactTwoSidedResult exact_two_sided(const TwoSidedInstance& inst, long long budget) {
  inst.validate();
  TwoSidedSearch search;
  search.inst = &inst;
  search.loads.assign(inst.num_firms(), {});
  search.assignment.assign(inst.num_workers, 0);
  search.budget = budget_or_default(budget);
  search.recurse(0);

  ExactTwoSidedResult result;
  result.matching.worker_to_firm = std::move(search.best_assignment);
  result.product = search.best_product;
  result.states = search.states;
  result.nsw = result.product.is_zero()
                   ? 0.0
                   : std::exp(result.product.ln() / (inst.num_firms() + inst.num_workers));
  return result;
}

ExactWeightedResult exact_weighted(const TwoSidedInstance& inst, long long budget) {
  inst.validate();
  if (!inst.weights) throw InputError("exact_weighted needs instance weights");
  WeightedSearch search;
  search.inst = &inst;
  for (const auto& w : inst.weights->firms) search.eta.push_back(w.to_double());
  for (const auto& w : inst.weights->workers) search.zeta.push_back(w.to_double());
  search.loads.assign(inst.num_firms(), {});
  search.assignment.assign(inst.num_workers, 0);
  search.budget = budget_or_default(budget);
  search.recurse(0);

  ExactWeightedResult result;
  result.matching.worker_to_firm = std::move(search.best_assignment);
  result.ln_nsw = search.best_log;
  result.nsw = std::isinf(search.best_log) ? 0.0 : std::exp(search.best_log);
  result.states = search.states;
  return result;
}

}  // namespace nswopt
