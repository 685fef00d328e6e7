#include <doctest.h>

#include <cmath>

#include "brute_force.hpp"
#include "generator.hpp"
#include "two_sided_solver.hpp"
#include "verify.hpp"

using namespace nswopt;
using nlohmann::json;

namespace {

TwoSidedInstance tiny() {
  TwoSidedInstance inst;
  inst.num_workers = 2;
  inst.capacities = {2};
  inst.firm_valuations.push_back(Valuation::additive({Rational(3), Rational(1)}));
  inst.worker_values = {{Rational(1)}, {Rational(1)}};
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("network structure") {
  TwoSidedInstance inst = tiny();
  TwoSidedNetwork network = build_network(inst);
  CHECK(network.net.num_nodes == 2 + 2 + 2);  // s, 2 workers, 2 firm copies, t
  // 2 source edges, 2 main + 2 secondary assignment edges, 2 copy-to-sink.
  CHECK(network.net.edges.size() == 8);
  CHECK(network.assign_edges.size() == 4);

  // Zero firm value kills the main edge only; zero worker value kills both.
  TwoSidedInstance zeroed = inst;
  zeroed.firm_valuations[0] = Valuation::additive({Rational(0), Rational(1)});
  TwoSidedNetwork z = build_network(zeroed);
  CHECK(z.assign_edges.size() == 3);

  TwoSidedInstance no_love = inst;
  no_love.worker_values[1][0] = Rational(0);
  TwoSidedNetwork nl = build_network(no_love);
  CHECK(nl.assign_edges.size() == 2);

  TwoSidedInstance inadequate = inst;
  inadequate.capacities = {1};
  CHECK_THROWS_AS(build_network(inadequate), InputError);
}

TEST_CASE("the worked n=1, m=2 instance") {
  TwoSidedInstance inst = tiny();
  TwoSidedResult res = solve_two_sided(inst);
  CHECK(res.diag.nsw == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));
  CHECK(res.main_worker == std::vector<int>{0});  // the favorite worker is main
  CHECK(res.diag.flow_cost == doctest::Approx(-std::log(3.0)));
  CHECK(res.diag.certificate_ok);
  CHECK(res.matching.worker_to_firm == std::vector<int>{0, 0});

  // Matches the enumerated optimum.
  ExactTwoSidedResult opt = exact_two_sided(inst);
  CHECK(res.diag.nsw == doctest::Approx(opt.nsw));
}

TEST_CASE("diagonal instances match perfectly") {
  TwoSidedInstance inst;
  inst.num_workers = 3;
  inst.capacities = {1, 1, 1};
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> values(3, Rational(0));
    values[i] = Rational(i + 2);
    inst.firm_valuations.push_back(Valuation::additive(values));
  }
  inst.worker_values.assign(3, std::vector<Rational>(3, Rational(1)));
  inst.validate();

  TwoSidedResult res = solve_two_sided(inst);
  CHECK(res.matching.worker_to_firm == std::vector<int>{0, 1, 2});
  // x = m/n = 1: the surrogate equals the true product and the flow solution
  // is exactly optimal.
  ExactTwoSidedResult opt = exact_two_sided(inst);
  CHECK(res.diag.nsw == doctest::Approx(opt.nsw));
  CHECK(res.diag.bound == doctest::Approx(1.0));
}

TEST_CASE("zero welfare falls back to an arbitrary feasible matching") {
  TwoSidedInstance inst = tiny();
  inst.worker_values = {{Rational(0)}, {Rational(0)}};
  TwoSidedResult res = solve_two_sided(inst);
  CHECK(res.diag.zero_welfare);
  CHECK(res.diag.nsw == 0.0);
  res.matching.validate(inst);
  CHECK(res.matching.is_fully_assigned());
}

TEST_CASE("guarantee and surrogate optimality on a random fleet") {
  for (int trial = 0; trial < 40; ++trial) {
    json params{{"family", "two-sided"}, {"n", 1 + trial % 3}, {"m", 1 + trial % 5},
                {"kind", "mixed"},       {"seed", 900 + trial}};
    TwoSidedInstance inst = generate_instance(params).two_sided();
    TwoSidedResult res = solve_two_sided(inst);
    res.matching.validate(inst);
    ExactTwoSidedResult opt = exact_two_sided(inst);
    if (opt.nsw == 0.0) continue;
    double x = res.diag.x_ratio;
    double bound = std::min(1.3211, std::exp(std::log(x) / (1.0 + x)));
    CHECK(res.diag.nsw * bound >= opt.nsw * (1 - 1e-9));
    CHECK(res.diag.certificate_ok);

    // The realized firm utilities dominate the favorite-worker surrogate
    // factors.
    auto loads = res.matching.firm_loads(inst.num_firms());
    for (int i = 0; i < inst.num_firms(); ++i) {
      CHECK(inst.firm_valuations[i].value(loads[i]) >=
            inst.firm_valuations[i].value_of_item(res.main_worker[i]));
    }
  }
}

TEST_CASE("ptas delegates or enumerates") {
  TwoSidedInstance inst = tiny();
  PtasResult delegated = solve_two_sided_ptas(inst, 0.5);
  CHECK_FALSE(delegated.used_enumeration);
  CHECK(delegated.nsw == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));

  // n=2, m=3, eps=0.1: m < n/eps^2, so the exhaustive branch runs and is
  // exactly optimal.
  json params{{"family", "two-sided"}, {"n", 2}, {"m", 3}, {"kind", "mixed"}, {"seed", 5}};
  TwoSidedInstance rnd = generate_instance(params).two_sided();
  PtasResult enumerated = solve_two_sided_ptas(rnd, 0.1);
  CHECK(enumerated.used_enumeration);
  ExactTwoSidedResult opt = exact_two_sided(rnd);
  CHECK(enumerated.exact_product == opt.product);

  // Single firm, small m, small eps: enumeration branch, provably optimal.
  TwoSidedInstance single = tiny();
  PtasResult one_firm = solve_two_sided_ptas(single, 0.1);
  CHECK(one_firm.used_enumeration);
  CHECK(one_firm.nsw == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));

  // Enumeration size cap.
  json big{{"family", "two-sided"}, {"n", 3}, {"m", 20}, {"kind", "additive"}, {"seed", 6}};
  TwoSidedInstance large = generate_instance(big).two_sided();
  CHECK_THROWS_AS(solve_two_sided_ptas(large, 0.01), ResourceError);
}

TEST_CASE("worst-case factor function") {
  // Dense sweep: x^(1/(1+x)) stays below 1.3211 and the combined-factor
  // curve peaks at x = e^(1/e).
  double max_factor = 0.0;
  double max_combined = 0.0;
  double argmax_combined = 0.0;
  for (int i = 1; i <= 1000000; ++i) {
    double x = i * 1e-4;  // (0, 100]
    double factor = std::exp(std::log(x) / (1.0 + x));
    max_factor = std::max(max_factor, factor);
    double combined = std::min(factor, std::exp(1.0 / (std::exp(1.0) * (x + 1.0))));
    if (combined > max_combined) {
      max_combined = combined;
      argmax_combined = x;
    }
  }
  CHECK(max_factor <= 1.3211);
  CHECK(max_factor > 1.3210);
  CHECK(argmax_combined == doctest::Approx(std::exp(1.0 / std::exp(1.0))).epsilon(1e-3));
  CHECK(max_combined == doctest::Approx(1.1624).epsilon(1e-3));
}
