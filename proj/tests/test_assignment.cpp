#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "assignment.hpp"
#include "errors.hpp"
#include "generator.hpp"

using namespace nswopt;

namespace {

// Independent oracle: best product over all injections of agents into items.
Rational best_product_brute(const std::vector<std::vector<Rational>>& weights) {
  const int n = static_cast<int>(weights.size());
  const int m = static_cast<int>(weights[0].size());
  std::vector<int> items(m);
  std::iota(items.begin(), items.end(), 0);
  Rational best(0);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Rational product(1);
    for (int i = 0; i < n; ++i) product *= weights[i][perm[i]];
    if (product > best) best = product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Rational product_of(const std::vector<std::vector<Rational>>& weights,
                    const std::vector<int>& match) {
  Rational product(1);
  for (size_t i = 0; i < weights.size(); ++i) product *= weights[i][match[i]];
  return product;
}

}  // namespace

TEST_CASE("max product matching on the 2x2 example") {
  // Both perfect matchings: diagonal gives 2*2 = 4, off-diagonal 1*1 = 1.
  std::vector<std::vector<Rational>> weights{{Rational(2), Rational(1)},
                                             {Rational(1), Rational(2)}};
  ProductMatching result = max_product_matching(weights);
  CHECK_FALSE(result.zero_product);
  CHECK(result.agent_to_item == std::vector<int>{0, 1});
  CHECK(product_of(weights, result.agent_to_item) == Rational(4));
}

TEST_CASE("zero edges are combinatorial, not priced") {
  std::vector<std::vector<Rational>> diag{{Rational(1), Rational(0), Rational(0)},
                                          {Rational(0), Rational(5), Rational(0)},
                                          {Rational(0), Rational(0), Rational(2)}};
  ProductMatching result = max_product_matching(diag);
  CHECK_FALSE(result.zero_product);
  CHECK(result.agent_to_item == std::vector<int>{0, 1, 2});

  std::vector<std::vector<Rational>> zeros{{Rational(0), Rational(0)},
                                           {Rational(0), Rational(0)}};
  ProductMatching degenerate = max_product_matching(zeros);
  CHECK(degenerate.zero_product);
  CHECK(degenerate.agent_to_item.size() == 2);  // arbitrary fallback still perfect

  // A positive matrix forced through a zero row panel.
  std::vector<std::vector<Rational>> blocked{{Rational(3), Rational(0)},
                                             {Rational(4), Rational(0)}};
  CHECK(max_product_matching(blocked).zero_product);
}

TEST_CASE("more items than agents") {
  std::vector<std::vector<Rational>> wide{{Rational(1), Rational(9), Rational(2)}};
  ProductMatching result = max_product_matching(wide);
  CHECK(result.agent_to_item == std::vector<int>{1});
  CHECK_THROWS_AS(max_product_matching({{Rational(1)}, {Rational(1)}}), InputError);
}

TEST_CASE("matches brute force on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform(1, 4);
    int m = rng.uniform(n, 5);
    std::vector<std::vector<Rational>> weights(n, std::vector<Rational>(m));
    for (auto& row : weights) {
      for (auto& w : row) w = Rational(rng.uniform(0, 6), rng.uniform(1, 4));
    }
    ProductMatching result = max_product_matching(weights);
    Rational best = best_product_brute(weights);
    if (best.is_zero()) {
      CHECK(result.zero_product);
    } else {
      REQUIRE_FALSE(result.zero_product);
      // Log-domain assignment can only drift by rounding noise; demand
      // exactness through the rational product.
      CHECK(product_of(weights, result.agent_to_item) == best);
      std::vector<int> sorted = result.agent_to_item;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
}
