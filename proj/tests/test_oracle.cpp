#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "brute_force.hpp"
#include "generator.hpp"

using namespace nswopt;
using nlohmann::json;

TEST_CASE("footnote family exact values") {
  // Unit capacities: the optimum is exactly c.
  json params{{"preset", "footnote"}, {"n", 3}, {"k", 2}, {"c", 5}, {"cap", 1}};
  OneSidedInstance capped = generate_instance(params).one_sided();
  ExactOneSidedResult res = exact_one_sided(capped);
  CHECK(res.product == Rational(125));  // 5^3, exactly
  CHECK(res.nsw == doctest::Approx(5.0));

  // Uncapacitated (cap = m): the optimum is exactly k*c.
  json un{{"preset", "footnote"}, {"n", 3}, {"k", 2}, {"c", 5}, {"cap", 6}};
  OneSidedInstance full = generate_instance(un).one_sided();
  ExactOneSidedResult res2 = exact_one_sided(full);
  CHECK(res2.product == Rational(1000));  // (k*c)^3
  CHECK(res2.nsw == doctest::Approx(10.0));
}

TEST_CASE("single agent takes its best feasible subset") {
  OneSidedInstance inst;
  inst.num_items = 4;
  inst.capacities = {2};
  inst.valuations.push_back(
      Valuation::additive({Rational(1), Rational(7), Rational(3), Rational(2)}));
  inst.validate();
  ExactOneSidedResult res = exact_one_sided(inst);
  CHECK(res.allocation.bundles[0] == std::vector<int>{1, 2});
  CHECK(res.product == Rational(10));
}

TEST_CASE("fast integer path agrees with the rational path") {
  // Same instances, one run with values inflated beyond the integer screen.
  for (int trial = 0; trial < 6; ++trial) {
    json params{{"family", "one-sided"}, {"n", 3}, {"m", 5}, {"kind", "mixed"},
                {"seed", 1000 + trial}};
    OneSidedInstance inst = generate_instance(params).one_sided();
    ExactOneSidedResult fast = exact_one_sided(inst);

    OneSidedInstance big = inst;
    Rational huge(1);
    for (int rep = 0; rep < 12; ++rep) huge *= Rational(1000000007);
    for (auto& v : big.valuations) {
      if (v.kind() != Valuation::Kind::kAdditive) continue;
      std::vector<Rational> values = v.item_values();
      for (auto& value : values) value *= huge;
      v = Valuation::additive(values);
    }
    ExactOneSidedResult slow = exact_one_sided(big);
    // Scale-free: the argmax labeling agrees.
    CHECK(slow.allocation.bundles == fast.allocation.bundles);
  }
}

TEST_CASE("one-sided optimum is enumeration-order independent") {
  // Mirroring the agents reverses the enumeration order; the optimum value
  // must not move.
  for (int trial = 0; trial < 8; ++trial) {
    json params{{"family", "one-sided"}, {"n", 2}, {"m", 5}, {"kind", "additive"},
                {"seed", 2500 + trial}};
    OneSidedInstance inst = generate_instance(params).one_sided();
    OneSidedInstance mirrored = inst;
    std::swap(mirrored.valuations[0], mirrored.valuations[1]);
    std::swap(mirrored.capacities[0], mirrored.capacities[1]);
    ExactOneSidedResult a = exact_one_sided(inst);
    ExactOneSidedResult b = exact_one_sided(mirrored);
    CHECK(a.product == b.product);
  }
}

TEST_CASE("two-sided oracle on the tiny instance") {
  TwoSidedInstance inst;
  inst.num_workers = 2;
  inst.capacities = {2};
  inst.firm_valuations.push_back(Valuation::additive({Rational(3), Rational(1)}));
  inst.worker_values = {{Rational(1)}, {Rational(1)}};
  inst.validate();
  ExactTwoSidedResult res = exact_two_sided(inst);
  CHECK(res.product == Rational(4));
  CHECK(res.nsw == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));
  CHECK(res.matching.worker_to_firm == std::vector<int>{0, 0});
}

TEST_CASE("uniform worker values reduce the two-sided optimum to one-sided structure") {
  json params{{"family", "one-sided"}, {"n", 2}, {"m", 4}, {"kind", "additive"},
              {"seed", 17}};
  OneSidedInstance one = generate_instance(params).one_sided();
  int total_cap = one.capacity_sum();
  if (total_cap < one.num_items) {
    one.capacities[0] += one.num_items - total_cap;
  }

  TwoSidedInstance two;
  two.num_workers = one.num_items;
  two.capacities = one.capacities;
  two.firm_valuations = one.valuations;
  two.worker_values.assign(one.num_items, std::vector<Rational>(2, Rational(1)));
  two.validate();

  ExactTwoSidedResult two_res = exact_two_sided(two);
  ExactOneSidedResult one_res = exact_one_sided(one);
  // Worker factors are all 1, so the two-sided product is the product of
  // firm utilities; with additive values and adequate capacities a complete
  // allocation attains the one-sided optimum, so the two agree exactly.
  CHECK(two_res.product == one_res.product);
}

TEST_CASE("weighted oracle reductions") {
  json params{{"family", "weighted"}, {"n", 2}, {"m", 3}, {"seed", 71}};
  TwoSidedInstance inst = generate_instance(params).two_sided();

  // Uniform weights match the unweighted oracle's argmax.
  TwoSidedInstance uniform = inst;
  int total = inst.num_firms() + inst.num_workers;
  uniform.weights = NswWeights{
      std::vector<Rational>(inst.num_firms(), Rational(1, total)),
      std::vector<Rational>(inst.num_workers, Rational(1, total))};
  ExactWeightedResult weighted = exact_weighted(uniform);
  ExactTwoSidedResult plain = exact_two_sided(uniform);
  CHECK(weighted.nsw == doctest::Approx(plain.nsw).epsilon(1e-9));

  // Order independence: reversing firm indices gives the mirrored optimum.
  TwoSidedInstance reversed = inst;
  std::swap(reversed.firm_valuations[0], reversed.firm_valuations[1]);
  std::swap(reversed.capacities[0], reversed.capacities[1]);
  std::swap(reversed.weights->firms[0], reversed.weights->firms[1]);
  for (auto& row : reversed.worker_values) std::swap(row[0], row[1]);
  ExactWeightedResult mirrored = exact_weighted(reversed);
  ExactWeightedResult original = exact_weighted(inst);
  CHECK(mirrored.ln_nsw == doctest::Approx(original.ln_nsw).epsilon(1e-12));
}

TEST_CASE("budget enforcement") {
  json params{{"family", "one-sided"}, {"n", 4}, {"m", 8}, {"kind", "additive"},
              {"seed", 5}};
  OneSidedInstance inst = generate_instance(params).one_sided();
  CHECK_THROWS_AS(exact_one_sided(inst, 1000), ResourceError);

  json two_params{{"family", "two-sided"}, {"n", 3}, {"m", 6}, {"kind", "additive"},
                  {"seed", 5}};
  TwoSidedInstance two = generate_instance(two_params).two_sided();
  CHECK_THROWS_AS(exact_two_sided(two, 50), ResourceError);
}

TEST_CASE("NSWOPT_BUDGET environment override") {
  setenv("NSWOPT_BUDGET", "123", 1);
  CHECK(default_enumeration_budget() == 123);
  setenv("NSWOPT_BUDGET", "bogus", 1);
  CHECK_THROWS_AS(default_enumeration_budget(), InputError);
  unsetenv("NSWOPT_BUDGET");
  CHECK(default_enumeration_budget() == 10000000);
}
