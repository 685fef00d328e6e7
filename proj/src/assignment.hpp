#pragma once

#include <vector>

#include "rational.hpp"

namespace nswopt {

struct ProductMatching {
  std::vector<int> agent_to_item;
  // No perfect matching avoids a zero-weight edge; agent_to_item is then an
  // arbitrary fallback (identity) and the product of matched weights is 0.
  bool zero_product = false;
};

// One-to-one matching of all n agents into m >= n items maximizing the
// product of matched weights. Solved as a min-cost assignment on -ln(w) with
// zero-weight edges excluded combinatorially rather than priced.
ProductMatching max_product_matching(const std::vector<std::vector<Rational>>& weights);

}  // namespace nswopt
