#include <doctest.h>

#include <cmath>

#include "generator.hpp"
#include "local_search.hpp"
#include "verify.hpp"

using namespace nswopt;

namespace {

OneSidedInstance single_agent_two_items() {
  // c = 2, additive values v(a)=2, v(b)=1.
  OneSidedInstance inst;
  inst.num_items = 2;
  inst.capacities = {2};
  inst.valuations.push_back(Valuation::additive({Rational(2), Rational(1)}));
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("single-agent partial swap") {
  // Endowed values: favorite a, so v'({b}) = 3, v'({a}) = 4. Starting from
  // {b}, the swap ratio 4/3 beats (1.1)^(1/2), and the new state is local
  // optimal.
  OneSidedInstance inst = single_agent_two_items();
  std::vector<std::vector<int>> start{{1}};
  LocalSearchState state = make_local_search_state(inst, {0, 1}, 0.1, start);

  CHECK(state.active[0]);
  CHECK(state.favorite[0] == 0);
  CHECK(state.endowment[0] == Rational(2));
  CHECK(state.eps_bar == doctest::Approx(std::sqrt(1.1) - 1.0));

  PartialSwap improving{0, 1, 0};
  CHECK(swap_gain_test(state, improving));

  run_local_search(state);
  CHECK(state.bundles[0] == std::vector<int>{0});
  CHECK(state.swaps == 1);
  CHECK(verify_no_improving_swap(state));
}

TEST_CASE("crosswise full swap uncrosses") {
  OneSidedInstance inst;
  inst.num_items = 2;
  inst.capacities = {2, 2};
  inst.valuations.push_back(Valuation::additive({Rational(1), Rational(0)}));
  inst.valuations.push_back(Valuation::additive({Rational(0), Rational(1)}));
  inst.validate();

  std::vector<std::vector<int>> crosswise{{1}, {0}};
  LocalSearchState state = make_local_search_state(inst, {0, 1}, 0.1, crosswise);
  FullSwap swap{0, 1, 1, 0};
  CHECK(swap_gain_test(state, swap));
  run_local_search(state);
  CHECK(state.bundles[0] == std::vector<int>{0});
  CHECK(state.bundles[1] == std::vector<int>{1});
  CHECK(state.swaps == 1);
}

TEST_CASE("unit capacities mean empty bundles and no swaps") {
  OneSidedInstance inst;
  inst.num_items = 3;
  inst.capacities = {1, 1};
  inst.valuations.push_back(Valuation::additive({Rational(1), Rational(2), Rational(3)}));
  inst.valuations.push_back(Valuation::additive({Rational(3), Rational(2), Rational(1)}));
  inst.validate();

  LocalSearchState state = local_search(inst, {0, 1, 2}, 0.1);
  CHECK(state.swaps == 0);
  CHECK(state.bundles[0].empty());
  CHECK(state.bundles[1].empty());
}

TEST_CASE("swap gain test edge cases") {
  OneSidedInstance inst = single_agent_two_items();
  std::vector<std::vector<int>> start{{1}};
  LocalSearchState state = make_local_search_state(inst, {0, 1}, 0.1, start);

  // Swapping an item for itself never improves.
  CHECK_FALSE(swap_gain_test(state, PartialSwap{0, 1, 1}));
  CHECK_FALSE(swap_gain_test(state, FullSwap{0, 1, 0, 1}));

  // Ratio exactly at the threshold is rejected (strict inequality): with one
  // item valued v and another valued exactly v, ratio is 1.
  OneSidedInstance flat;
  flat.num_items = 2;
  flat.capacities = {2};
  flat.valuations.push_back(Valuation::additive({Rational(1), Rational(1)}));
  LocalSearchState flat_state = make_local_search_state(flat, {0, 1}, 0.1,
                                                        std::vector<std::vector<int>>{{0}});
  CHECK_FALSE(swap_gain_test(flat_state, PartialSwap{0, 0, 1}));
}

TEST_CASE("price table") {
  // Two agents with one owned item each; prices follow the exact formula.
  OneSidedInstance inst;
  inst.num_items = 2;
  inst.capacities = {2, 2};
  inst.valuations.push_back(Valuation::additive({Rational(3), Rational(1)}));
  inst.valuations.push_back(Valuation::additive({Rational(1), Rational(2)}));
  inst.validate();

  std::vector<std::vector<int>> bundles{{0}, {1}};
  LocalSearchState state = make_local_search_state(inst, {0, 1}, 0.1, bundles);

  PriceTable prices = compute_prices(state);
  // Agent 0 endowment: favorite item 0 (value 3), bundle {0}: vbar = 6.
  // Trading item 0 for item 1: vbar = 3 + 1 = 4; price = (6-4)/4 = 1/2.
  CHECK(prices.price(0, 1) == Rational(1, 2));
  // Agent 1 endowment: favorite item 1 (value 2), bundle {1}: vbar = 4.
  // Trading item 1 for item 0: vbar = 2 + 1 = 3; price = (4-3)/3 = 1/3.
  CHECK(prices.price(1, 0) == Rational(1, 3));
  // Same-item pair and unallocated pairs price at 0.
  CHECK(prices.price(0, 0) == Rational(0));

  // Unallocated item: price must be 0 regardless of the partner.
  OneSidedInstance wide = inst;
  wide.num_items = 3;
  for (auto& v : wide.valuations) v = v.zero_extended(3);
  LocalSearchState wide_state = make_local_search_state(wide, {0, 1, 2}, 0.1,
                                                        std::vector<std::vector<int>>{{0}, {1}});
  PriceTable wide_prices = compute_prices(wide_state);
  CHECK(wide_prices.price(2, 0) == Rational(0));
  CHECK(wide_prices.price(2, 1) == Rational(0));

  // A strictly improving replacement prices at 0 (max with 0 branch).
  CHECK(wide_prices.price(1, 0) == Rational(1, 3));
  OneSidedInstance improving;
  improving.num_items = 2;
  improving.capacities = {2, 2};
  improving.valuations.push_back(Valuation::additive({Rational(1), Rational(5)}));
  improving.valuations.push_back(Valuation::additive({Rational(1), Rational(1)}));
  LocalSearchState imp_state = make_local_search_state(improving, {0, 1}, 0.1,
                                                       std::vector<std::vector<int>>{{0}, {1}});
  PriceTable imp_prices = compute_prices(imp_state);
  CHECK(imp_prices.price(0, 1) == Rational(0));
}

TEST_CASE("local search invariants on random instances") {
  for (int trial = 0; trial < 30; ++trial) {
    nlohmann::json params{{"family", "one-sided"}, {"n", 2 + trial % 3}, {"m", 7},
                          {"kind", "mixed"},       {"seed", 500 + trial}};
    OneSidedInstance inst = generate_instance(params).one_sided();
    int required = 0;
    for (int c : inst.capacities) required += c - 1;
    if (required > inst.num_items) continue;

    std::vector<int> pool(inst.num_items);
    for (int j = 0; j < inst.num_items; ++j) pool[j] = j;
    LocalSearchState state = local_search(inst, pool, 0.15);

    // |R_i| = c_i - 1 for every agent, bundles disjoint, swap count bounded.
    std::vector<char> seen(inst.num_items, 0);
    for (int i = 0; i < inst.num_agents(); ++i) {
      CHECK(static_cast<int>(state.bundles[i].size()) == inst.capacities[i] - 1);
      for (int j : state.bundles[i]) {
        CHECK_FALSE(seen[j]);
        seen[j] = 1;
      }
    }
    CHECK(state.swaps <= state.iteration_bound);
    CHECK(verify_no_improving_swap(state));

    // Termination condition and price bound, exhaustively.
    PriceTable prices = compute_prices(state);
    const double log_one_plus_eps_hat = std::log1p(state.eps_hat);
    for (int i = 0; i < inst.num_agents(); ++i) {
      if (!state.active[i]) continue;
      for (int k : state.bundles[i]) {
        for (int j : state.pool_items) {
          double lhs = state.endowed_value_swapped(i, k, j).ln() -
                       state.bundle_value[i].ln();
          double rhs = log_one_plus_eps_hat +
                       std::log1p(prices.price(j, k).to_double());
          CHECK(lhs <= rhs + 1e-8);
        }
      }
      // Any per-item choice of k_j sums to at most 1; sample a few choices.
      Rng rng(trial);
      for (int round = 0; round < 20; ++round) {
        Rational total(0);
        for (int j : state.bundles[i]) {
          int k = state.pool_items[rng.uniform(0, static_cast<int>(state.pool_items.size()) - 1)];
          total += prices.price(j, k);
        }
        CHECK(total <= Rational(1));
      }
    }
  }
}

TEST_CASE("pool too small") {
  OneSidedInstance inst;
  inst.num_items = 3;
  inst.capacities = {4, 2};  // needs 3 + 1 pool items, only 3 exist
  inst.valuations.push_back(Valuation::additive({Rational(1), Rational(1), Rational(1)}));
  inst.valuations.push_back(Valuation::additive({Rational(1), Rational(1), Rational(1)}));
  CHECK_THROWS_AS(local_search(inst, {0, 1, 2}, 0.1), InfeasibleError);
}
