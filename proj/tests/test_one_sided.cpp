#include <doctest.h>

#include <cmath>
#include <limits>

#include "brute_force.hpp"
#include "generator.hpp"
#include "one_sided_solver.hpp"

using namespace nswopt;
using nlohmann::json;

TEST_CASE("exact-capacity reduction") {
  OneSidedInstance inst;
  inst.num_items = 1;
  inst.capacities = {2, 1};
  inst.valuations.push_back(Valuation::additive({Rational(3)}));
  inst.valuations.push_back(Valuation::additive({Rational(2)}));
  inst.validate();

  ExactCapacitatedReduction red = to_exact_capacitated(inst);
  CHECK(red.instance.num_items == 3);  // two dummies appended
  CHECK(red.original_items == 1);
  CHECK(red.has_dummies());
  // Dummies add nothing to any bundle.
  CHECK(red.instance.valuations[0].value({0, 1, 2}) == Rational(3));
  CHECK(red.instance.valuations[0].value({1, 2}) == Rational(0));

  // Already exact: untouched.
  OneSidedInstance exact;
  exact.num_items = 3;
  exact.capacities = {2, 1};
  exact.valuations.push_back(Valuation::additive({Rational(1), Rational(1), Rational(1)}));
  exact.valuations.push_back(Valuation::additive({Rational(1), Rational(1), Rational(1)}));
  ExactCapacitatedReduction same = to_exact_capacitated(exact);
  CHECK(same.instance.num_items == 3);
  CHECK_FALSE(same.has_dummies());
}

TEST_CASE("rematch") {
  // Single agent: the one phase-1 item is appended.
  OneSidedInstance one;
  one.num_items = 2;
  one.capacities = {2};
  one.valuations.push_back(Valuation::additive({Rational(2), Rational(1)}));
  Allocation forced = rematch(one, {{1}}, {0});
  CHECK(forced.bundles[0] == std::vector<int>{0, 1});

  // Empty bundles reduce to the max-product matching on singletons.
  OneSidedInstance flat;
  flat.num_items = 2;
  flat.capacities = {1, 1};
  flat.valuations.push_back(Valuation::additive({Rational(2), Rational(1)}));
  flat.valuations.push_back(Valuation::additive({Rational(1), Rational(2)}));
  Allocation diag = rematch(flat, {{}, {}}, {0, 1});
  CHECK(diag.bundles[0] == std::vector<int>{0});
  CHECK(diag.bundles[1] == std::vector<int>{1});

  // Marginal gains differ across agents; enumeration agrees. Agent 0 has a
  // cap-1 bundle already worth 4, so item 2 adds nothing to it; agent 1 is
  // additive and prefers item 2 over item 3.
  OneSidedInstance mixed;
  mixed.num_items = 4;
  mixed.capacities = {2, 2};
  mixed.valuations.push_back(Valuation::capped_additive(
      {Rational(4), Rational(0), Rational(3), Rational(3)}, 1));
  mixed.valuations.push_back(Valuation::additive(
      {Rational(0), Rational(1), Rational(5), Rational(2)}));
  Allocation best = rematch(mixed, {{0}, {1}}, {2, 3});
  // Options: agent0+2/agent1+3 -> 4 * 3 = 12; agent0+3/agent1+2 -> 4 * 6 = 24.
  CHECK(best.bundles[0] == std::vector<int>{0, 3});
  CHECK(best.bundles[1] == std::vector<int>{1, 2});

  CHECK_THROWS_AS(rematch(one, {{1}}, {0, 1}), InputError);
}

TEST_CASE("footnote family solves to NSW = c under unit capacities") {
  json params{{"preset", "footnote"}, {"n", 3}, {"k", 2}, {"c", 5}, {"cap", 1}};
  OneSidedInstance inst = generate_instance(params).one_sided();
  OneSidedResult res = solve_one_sided(inst, 0.1);
  CHECK(res.diag.nsw == doctest::Approx(5.0));
  CHECK(res.allocation.is_feasible(inst));
  CHECK(res.diag.swaps == 0);  // unit capacities leave nothing to search
}

TEST_CASE("single agent takes its best two items") {
  OneSidedInstance inst;
  inst.num_items = 3;
  inst.capacities = {2};
  inst.valuations.push_back(Valuation::additive({Rational(3), Rational(2), Rational(1)}));
  inst.validate();
  OneSidedResult res = solve_one_sided(inst, 0.1);
  CHECK(res.allocation.bundles[0] == std::vector<int>{0, 1});
  CHECK(res.diag.nsw == doctest::Approx(5.0));
}

TEST_CASE("worthless instance returns a feasible allocation") {
  OneSidedInstance inst;
  inst.num_items = 2;
  inst.capacities = {1, 1};
  inst.valuations.push_back(Valuation::additive({Rational(0), Rational(0)}));
  inst.valuations.push_back(Valuation::additive({Rational(0), Rational(0)}));
  inst.validate();
  OneSidedResult res = solve_one_sided(inst, 0.1);
  CHECK(res.diag.zero_welfare);
  CHECK(res.diag.nsw == 0.0);
  CHECK(res.allocation.is_feasible(inst));
}

TEST_CASE("diagnostics are populated") {
  json params{{"family", "one-sided"}, {"n", 3}, {"m", 6}, {"kind", "mixed"}, {"seed", 21}};
  OneSidedInstance inst = generate_instance(params).one_sided();
  OneSidedRun run = solve_one_sided_run(inst, 0.12);
  CHECK(run.result.diag.queries > 0);
  CHECK(run.result.diag.iterations_bound > 0);
  CHECK(run.result.diag.swaps <= run.result.diag.iterations_bound);
  CHECK(run.result.diag.eps_bar ==
        doctest::Approx(std::pow(1.0 + 0.12 / 6.0, 1.0 / run.result.diag.exact_items) - 1.0));
  CHECK(run.exact_instance->num_items == run.result.diag.exact_items);
}

TEST_CASE("EF1 gamma diagnostic") {
  OneSidedInstance inst;
  inst.num_items = 4;
  inst.capacities = {2, 2};
  inst.valuations.push_back(
      Valuation::additive({Rational(1), Rational(1), Rational(5), Rational(5)}));
  inst.valuations.push_back(
      Valuation::additive({Rational(5), Rational(5), Rational(1), Rational(1)}));
  inst.validate();
  Allocation alloc{{{0, 1}, {2, 3}}};
  // Each agent values its own bundle at 2 and the other's pair minus its
  // best item at 5, symmetrically.
  CHECK(ef1_gamma(inst, alloc) == doctest::Approx(0.4));

  // Swapped ownership removes all envy.
  Allocation happy{{{2, 3}, {0, 1}}};
  CHECK(std::isinf(ef1_gamma(inst, happy)) == false);
  CHECK(ef1_gamma(inst, happy) == doctest::Approx(10.0));
}

TEST_CASE("guarantee against the exact oracle on a small fleet") {
  int solved = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const char* kinds[] = {"additive", "capped", "coverage"};
    json params{{"family", "one-sided"}, {"n", 2 + trial % 3}, {"m", 4 + trial % 3},
                {"kind", kinds[trial % 3]}, {"seed", 7000 + trial}};
    OneSidedInstance inst = generate_instance(params).one_sided();
    OneSidedResult res = solve_one_sided(inst, 0.1);
    REQUIRE(res.allocation.is_feasible(inst));
    ExactOneSidedResult opt = exact_one_sided(inst);
    if (opt.nsw == 0.0) continue;
    CHECK(res.diag.nsw >= opt.nsw / (6.0 * 1.1) * (1 - 1e-9));
    ++solved;
  }
  CHECK(solved > 10);
}
