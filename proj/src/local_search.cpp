#include "local_search.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace nswopt {

namespace {

// Log-domain slack treated as non-improving, so borderline swaps cannot
// cycle; any effective threshold above 1+eps_hat only tightens the accuracy.
constexpr double kLogSlack = 1e-9;

// R - out + in with set semantics: adding an item already present is a
// no-op, so the exchange degenerates to a plain removal.
std::vector<int> with_replacement(const std::vector<int>& bundle, int out, int in) {
  std::vector<int> result;
  result.reserve(bundle.size() + 1);
  bool in_present = false;
  for (int x : bundle) {
    if (x == out) continue;
    result.push_back(x);
    in_present = in_present || x == in;
  }
  if (in >= 0 && !in_present) result.push_back(in);
  return result;
}

}  // namespace

Rational LocalSearchState::endowed_value_swapped(int agent, int out, int in) const {
  std::vector<int> items = with_replacement(bundles[agent], out, in);
  return endowment[agent] + inst->valuations[agent].value(items);
}

bool swap_gain_test(const LocalSearchState& state, const FullSwap& swap) {
  if (swap.agent_a == swap.agent_b || swap.item_a == swap.item_b) return false;
  if (!state.active[swap.agent_a] || !state.active[swap.agent_b]) return false;
  double gain =
      state.endowed_value_swapped(swap.agent_a, swap.item_a, swap.item_b).ln() +
      state.endowed_value_swapped(swap.agent_b, swap.item_b, swap.item_a).ln() -
      state.bundle_value[swap.agent_a].ln() - state.bundle_value[swap.agent_b].ln();
  return gain > state.log_threshold + kLogSlack;
}

bool swap_gain_test(const LocalSearchState& state, const PartialSwap& swap) {
  if (!state.active[swap.agent]) return false;
  double gain = state.endowed_value_swapped(swap.agent, swap.item_out, swap.item_in).ln() -
                state.bundle_value[swap.agent].ln();
  return gain > state.log_threshold + kLogSlack;
}

LocalSearchState make_local_search_state(
    const OneSidedInstance& inst, std::vector<int> pool, double eps,
    const std::optional<std::vector<std::vector<int>>>& initial_bundles) {
  if (eps <= 0) throw InputError("local search needs eps > 0");
  const int n = inst.num_agents();

  LocalSearchState state;
  state.inst = &inst;
  std::sort(pool.begin(), pool.end());
  state.pool_items = std::move(pool);
  state.in_pool.assign(inst.num_items, 0);
  for (int j : state.pool_items) {
    if (j < 0 || j >= inst.num_items) throw InputError("pool item out of range");
    if (state.in_pool[j]) throw InputError("duplicate pool item");
    state.in_pool[j] = 1;
  }

  int required = 0;
  for (int i = 0; i < n; ++i) required += inst.capacities[i] - 1;
  if (static_cast<int>(state.pool_items.size()) < required) {
    throw InfeasibleError("pool too small to fill every bundle to c_i - 1");
  }

  state.eps = eps;
  const int big_m = std::max(1, inst.num_items);
  state.eps_bar = std::expm1(std::log1p(eps) / big_m);
  state.eps_hat = std::expm1(n * std::log1p(state.eps_bar));
  state.log_threshold = n * std::log1p(state.eps_bar);
  state.iteration_bound =
      big_m <= 1 ? 0
                 : static_cast<long long>(
                       std::ceil(std::log(static_cast<double>(big_m)) /
                                 std::log1p(state.eps_bar)));

  state.active.assign(n, 0);
  state.favorite.assign(n, -1);
  state.endowment.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (inst.valuations[i].value(state.pool_items).is_zero()) continue;
    state.active[i] = 1;
    Rational best(-1);
    for (int j : state.pool_items) {
      Rational v = inst.valuations[i].value_of_item(j);
      if (v > best) {
        best = v;
        state.favorite[i] = j;
      }
    }
    state.endowment[i] = best;
  }

  state.bundles.assign(n, {});
  state.owner.assign(inst.num_items, -1);
  if (initial_bundles) {
    if (static_cast<int>(initial_bundles->size()) != n) {
      throw InputError("initial bundles must cover every agent");
    }
    for (int i = 0; i < n; ++i) {
      const auto& bundle = (*initial_bundles)[i];
      if (!state.active[i]) {
        if (!bundle.empty()) throw InputError("initial bundles only cover active agents");
        continue;
      }
      if (static_cast<int>(bundle.size()) != inst.capacities[i] - 1) {
        throw InputError("initial bundle sizes must be c_i - 1");
      }
      for (int j : bundle) {
        if (j < 0 || j >= inst.num_items || !state.in_pool[j] || state.owner[j] != -1) {
          throw InputError("initial bundles must be disjoint subsets of the pool");
        }
        state.owner[j] = i;
      }
      state.bundles[i] = bundle;
      std::sort(state.bundles[i].begin(), state.bundles[i].end());
    }
  } else {
    // Greedy round-robin start: active agents take their best remaining
    // pool item until each holds c_i - 1.
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < n; ++i) {
        if (!state.active[i]) continue;
        if (static_cast<int>(state.bundles[i].size()) >= inst.capacities[i] - 1) continue;
        int pick = -1;
        Rational best(-1);
        for (int j : state.pool_items) {
          if (state.owner[j] != -1) continue;
          Rational v = inst.valuations[i].value_of_item(j);
          if (v > best) {
            best = v;
            pick = j;
          }
        }
        state.owner[pick] = i;
        state.bundles[i].push_back(pick);
        progress = true;
      }
    }
    for (auto& bundle : state.bundles) std::sort(bundle.begin(), bundle.end());
  }

  state.bundle_value.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (state.active[i]) {
      state.bundle_value[i] = state.endowment[i] + inst.valuations[i].value(state.bundles[i]);
    }
  }
  return state;
}

namespace {

void perform_swap(LocalSearchState& state, int agent, int out, int in) {
  auto& bundle = state.bundles[agent];
  bundle.erase(std::find(bundle.begin(), bundle.end(), out));
  bundle.insert(std::lower_bound(bundle.begin(), bundle.end(), in), in);
  state.owner[out] = -1;
  state.bundle_value[agent] = state.endowment[agent] + state.inst->valuations[agent].value(bundle);
}

}  // namespace

bool apply_one_swap(LocalSearchState& state) {
  const int n = state.inst->num_agents();
  // Partial swaps first: pull an unallocated pool item in.
  for (int i = 0; i < n; ++i) {
    if (!state.active[i]) continue;
    for (int j : state.bundles[i]) {
      for (int k : state.pool_items) {
        if (state.owner[k] != -1) continue;
        PartialSwap swap{i, j, k};
        if (swap_gain_test(state, swap)) {
          perform_swap(state, i, j, k);
          state.owner[k] = i;
          ++state.swaps;
          return true;
        }
      }
    }
  }
  // Full swaps: exchange items between two active agents.
  for (int i = 0; i < n; ++i) {
    if (!state.active[i]) continue;
    for (int j : state.bundles[i]) {
      for (int k : state.pool_items) {
        int other = state.owner[k];
        if (other == -1 || other == i || !state.active[other]) continue;
        FullSwap swap{i, j, other, k};
        if (swap_gain_test(state, swap)) {
          Rational new_a = state.endowed_value_swapped(i, j, k);
          Rational new_b = state.endowed_value_swapped(other, k, j);
          auto& bundle_a = state.bundles[i];
          auto& bundle_b = state.bundles[other];
          bundle_a.erase(std::find(bundle_a.begin(), bundle_a.end(), j));
          bundle_a.insert(std::lower_bound(bundle_a.begin(), bundle_a.end(), k), k);
          bundle_b.erase(std::find(bundle_b.begin(), bundle_b.end(), k));
          bundle_b.insert(std::lower_bound(bundle_b.begin(), bundle_b.end(), j), j);
          state.owner[j] = other;
          state.owner[k] = i;
          state.bundle_value[i] = new_a;
          state.bundle_value[other] = new_b;
          ++state.swaps;
          return true;
        }
      }
    }
  }
  return false;
}

void run_local_search(LocalSearchState& state) {
  while (apply_one_swap(state)) {
  }
  // Top inactive agents up from the leftover pool, in index order.
  const int n = state.inst->num_agents();
  size_t cursor = 0;
  for (int i = 0; i < n; ++i) {
    if (state.active[i]) continue;
    int want = state.inst->capacities[i] - 1;
    while (static_cast<int>(state.bundles[i].size()) < want) {
      while (cursor < state.pool_items.size() && state.owner[state.pool_items[cursor]] != -1) {
        ++cursor;
      }
      int item = state.pool_items[cursor];
      state.owner[item] = i;
      state.bundles[i].push_back(item);
    }
    std::sort(state.bundles[i].begin(), state.bundles[i].end());
  }
}

LocalSearchState local_search(
    const OneSidedInstance& inst, std::vector<int> pool, double eps,
    const std::optional<std::vector<std::vector<int>>>& initial_bundles) {
  LocalSearchState state = make_local_search_state(inst, std::move(pool), eps, initial_bundles);
  run_local_search(state);
  return state;
}

PriceTable compute_prices(const LocalSearchState& state) {
  PriceTable table;
  table.eps_hat = state.eps_hat;
  const int n = state.inst->num_agents();
  for (int i = 0; i < n; ++i) {
    if (!state.active[i]) continue;
    for (int j : state.bundles[i]) {
      for (int k : state.pool_items) {
        int other = state.owner[k];
        if (other == -1 || !state.active[other]) continue;
        if (k == j) continue;
        Rational denom = state.endowed_value_swapped(i, j, k);
        Rational diff = state.bundle_value[i] - denom;
        if (diff > Rational(0)) {
          table.positive[{j, k}] = diff / denom;
        }
      }
    }
  }
  return table;
}

}  // namespace nswopt
