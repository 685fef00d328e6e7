#include <doctest.h>

#include <cmath>

#include "min_cost_flow.hpp"
#include "verify.hpp"

using namespace nswopt;

namespace {

// s=0, a=1, b=2, t=3: two parallel routes with different costs.
FlowNetwork two_route_network(double cost_a, double cost_b) {
  FlowNetwork net;
  net.num_nodes = 4;
  net.source = 0;
  net.sink = 3;
  net.edges.push_back({0, 1, 0, 1, 0.0});
  net.edges.push_back({0, 2, 0, 1, 0.0});
  net.edges.push_back({1, 3, 0, 1, cost_a});
  net.edges.push_back({2, 3, 0, 1, cost_b});
  return net;
}

}  // namespace

TEST_CASE("forced flow through lower bounds") {
  FlowNetwork net;
  net.num_nodes = 3;
  net.source = 0;
  net.sink = 2;
  net.edges.push_back({0, 1, 1, 1, 0.0});
  net.edges.push_back({1, 2, 1, 1, -2.5});
  FlowResult flow = solve_min_cost_flow(net);
  REQUIRE(flow.feasible);
  CHECK(flow.flow == std::vector<long long>{1, 1});
  CHECK(flow.cost == doctest::Approx(-2.5));
}

TEST_CASE("min cost route wins, including negative costs") {
  // One forced unit out of the source picks the cheaper of two routes; the
  // cheap route has a negative cost.
  FlowNetwork net;
  net.num_nodes = 5;
  net.source = 0;
  net.sink = 4;
  net.edges.push_back({0, 1, 1, 1, 0.0});
  net.edges.push_back({1, 2, 0, 1, -std::log(3.0)});
  net.edges.push_back({1, 3, 0, 1, 0.0});
  net.edges.push_back({2, 4, 0, 1, 0.0});
  net.edges.push_back({3, 4, 0, 1, 0.0});
  FlowResult flow = solve_min_cost_flow(net);
  REQUIRE(flow.feasible);
  CHECK(flow.cost == doctest::Approx(-std::log(3.0)));
  CHECK(flow.flow == std::vector<long long>{1, 1, 0, 1, 0});
  CHECK(residual_optimality_certificate(net, flow.flow, 1e-9));
}

TEST_CASE("infeasible lower bounds are reported") {
  FlowNetwork net;
  net.num_nodes = 3;
  net.source = 0;
  net.sink = 2;
  net.edges.push_back({0, 1, 1, 1, 0.0});
  // Node 1 must forward one unit but its outgoing edge allows none.
  net.edges.push_back({1, 2, 0, 0, 0.0});
  FlowResult flow = solve_min_cost_flow(net);
  CHECK_FALSE(flow.feasible);

  FlowNetwork bad;
  bad.num_nodes = 2;
  bad.source = 0;
  bad.sink = 1;
  bad.edges.push_back({0, 1, 2, 1, 0.0});
  CHECK_THROWS_AS(solve_min_cost_flow(bad), InputError);
}

TEST_CASE("zero-cost network: any feasible flow passes the certificate") {
  FlowNetwork net = two_route_network(0.0, 0.0);
  FlowResult flow = solve_min_cost_flow(net);
  REQUIRE(flow.feasible);
  CHECK(flow.cost == doctest::Approx(0.0));
  CHECK(residual_optimality_certificate(net, flow.flow, 1e-9));
  CHECK(verify_flow_optimal(net, flow.flow, 1e-7));
}

TEST_CASE("corrupting an optimal flow trips both checkers") {
  // Cheap route through a, expensive through b; a min-cost flow of value 1
  // uses a. Rerouting that unit through b leaves a negative residual cycle.
  FlowNetwork net;
  net.num_nodes = 4;
  net.source = 0;
  net.sink = 3;
  net.edges.push_back({0, 1, 0, 1, 0.0});
  net.edges.push_back({0, 2, 0, 1, 0.0});
  net.edges.push_back({1, 3, 1, 1, 0.0});   // lower bound forces value 1 via a
  net.edges.push_back({2, 3, 0, 1, 5.0});
  FlowResult flow = solve_min_cost_flow(net);
  REQUIRE(flow.feasible);
  CHECK(flow.flow == std::vector<long long>{1, 0, 1, 0});

  FlowNetwork reroute = net;
  reroute.edges[2].lower = 0;  // legal space for the corrupted flow
  std::vector<long long> corrupted{0, 1, 0, 1};
  CHECK(verify_flow_optimal(reroute, flow.flow, 1e-7));
  CycleWitness witness;
  CHECK_FALSE(verify_flow_optimal(reroute, corrupted, 1e-7, &witness));
  CHECK(witness.cost < -1e-7);
  CHECK_FALSE(residual_optimality_certificate(reroute, corrupted, 1e-7));

  // Conservation violations are caught too.
  std::vector<long long> unbalanced{1, 0, 0, 1};
  CHECK_FALSE(verify_flow_optimal(reroute, unbalanced, 1e-7));
}
