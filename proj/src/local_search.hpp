#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "instance.hpp"

namespace nswopt {

// State of the capacity-preserving local search. Bundles hold exactly
// c_i - 1 items throughout; swaps never change cardinalities. Gains are
// measured with the endowed valuations: each active agent's valuation is
// shifted up by its value for its favorite item of the pool, which keeps
// every ratio well defined.
struct LocalSearchState {
  const OneSidedInstance* inst = nullptr;
  std::vector<int> pool_items;            // J, ascending
  std::vector<char> in_pool;              // item -> is in J
  std::vector<char> active;               // agent -> v_i(J) > 0
  std::vector<int> favorite;              // agent -> l(i), -1 if inactive
  std::vector<Rational> endowment;        // agent -> v_i(l(i)), 0 if inactive
  std::vector<std::vector<int>> bundles;  // agent -> R_i, ascending
  std::vector<int> owner;                 // item -> owning agent or -1
  std::vector<Rational> bundle_value;     // agent -> endowed v of R_i (active only)

  double eps = 0.0;
  double eps_bar = 0.0;        // (1+eps)^(1/M) - 1
  double eps_hat = 0.0;        // (1+eps_bar)^n - 1
  double log_threshold = 0.0;  // ln(1+eps_hat)
  int swaps = 0;
  long long iteration_bound = 0;  // ceil(log_{1+eps_bar} M)

  // Endowed value of R_i with `out` replaced by `in` (pass out = -1 to only
  // add, in = -1 to only drop).
  Rational endowed_value_swapped(int agent, int out, int in) const;
};

struct FullSwap {
  int agent_a;  // owns item_a
  int item_a;
  int agent_b;  // owns item_b
  int item_b;
};

struct PartialSwap {
  int agent;      // owns item_out
  int item_out;
  int item_in;    // unallocated pool item
};

// Strict improvement tests: the endowed product must rise by a factor
// greater than (1+eps_hat), checked in the log domain with 1e-9 slack
// counted as non-improving.
bool swap_gain_test(const LocalSearchState& state, const FullSwap& swap);
bool swap_gain_test(const LocalSearchState& state, const PartialSwap& swap);

// Builds the initial state over pool J: active set, favorites, endowments,
// and a greedy round-robin start (or the bundles supplied by the caller,
// which must already have |R_i| = c_i - 1 per active agent). The accuracy
// parameter is derived from inst->num_items.
LocalSearchState make_local_search_state(
    const OneSidedInstance& inst, std::vector<int> pool, double eps,
    const std::optional<std::vector<std::vector<int>>>& initial_bundles = std::nullopt);

// Applies the first improving swap in scan order: Partial swaps before Full
// swaps, each lexicographic in (agent, owned item, incoming item). Returns
// false at a local optimum.
bool apply_one_swap(LocalSearchState& state);

// Runs swaps to termination, then tops the inactive agents up to c_i - 1
// items from the leftover pool (in index order; their value is 0 anyway).
void run_local_search(LocalSearchState& state);

// Convenience wrapper: build, run, return the final state.
LocalSearchState local_search(
    const OneSidedInstance& inst, std::vector<int> pool, double eps,
    const std::optional<std::vector<std::vector<int>>>& initial_bundles = std::nullopt);

// Pairwise prices of the terminated search. p[j][k] measures the relative
// endowed loss of handing item j's owner the item k instead; it is 0 unless
// both items are held by active agents and the exchange strictly hurts.
struct PriceTable {
  std::map<std::pair<int, int>, Rational> positive;
  double eps_hat = 0.0;

  Rational price(int item_j, int item_k) const {
    auto it = positive.find({item_j, item_k});
    return it == positive.end() ? Rational(0) : it->second;
  }
};

PriceTable compute_prices(const LocalSearchState& state);

}  // namespace nswopt
