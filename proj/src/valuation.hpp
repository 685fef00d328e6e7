#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "rational.hpp"

namespace nswopt {

// Monotone normalized set-function oracle over items {0,...,m-1}.
//
// Four concrete families:
//   Additive         v(S) = sum of per-item values
//   CappedAdditive   v(S) = sum of the min(cap,|S|) largest values in S
//   WeightedCoverage v(S) = total weight of the union of the items' element sets
//   ExplicitTable    v(S) read from a 2^m table, m <= 16
//
// Every call to value() bumps an oracle query counter so query complexity can
// be audited. A valuation may be zero-extended beyond its payload (items past
// the original universe are worthless); this keeps the exact-capacity
// reduction's dummy items inside the same type.
class Valuation {
 public:
  enum class Kind { kAdditive, kCappedAdditive, kWeightedCoverage, kExplicitTable };

  static Valuation additive(std::vector<Rational> values);
  static Valuation capped_additive(std::vector<Rational> values, int cap);
  static Valuation weighted_coverage(int universe, std::vector<Rational> elem_weights,
                                     std::vector<std::vector<int>> sets);
  // `table` has 2^m entries indexed by subset bitmask; checked for
  // normalization and monotonicity exhaustively.
  static Valuation explicit_table(int m, std::vector<Rational> table);

  Kind kind() const { return kind_; }
  int num_items() const { return m_; }

  // v(S). S must contain in-range, duplicate-free item indices.
  Rational value(std::span<const int> items) const;
  Rational value(const std::vector<int>& items) const {
    return value(std::span<const int>(items));
  }
  Rational value_of_item(int item) const;  // singleton shorthand

  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_query_count() const { queries_.store(0, std::memory_order_relaxed); }

  // Same-kind valuation over `new_m >= num_items()` items; the added items
  // contribute zero value to every subset.
  Valuation zero_extended(int new_m) const;

  // Payload accessors (used by generators, serialization, the exact oracles).
  const std::vector<Rational>& item_values() const { return values_; }
  int cap() const { return cap_; }
  int coverage_universe() const { return universe_; }
  const std::vector<Rational>& element_weights() const { return elem_weights_; }
  const std::vector<std::vector<int>>& item_sets() const { return sets_; }
  const std::vector<Rational>& table() const { return table_; }
  int table_items() const { return table_m_; }  // payload size before zero-extension

  Valuation(const Valuation& other);
  Valuation& operator=(const Valuation& other);
  Valuation(Valuation&& other) noexcept;
  Valuation& operator=(Valuation&& other) noexcept;

 private:
  Valuation() = default;
  void check_items(std::span<const int> items) const;
  Rational value_impl(std::span<const int> items) const;

  Kind kind_ = Kind::kAdditive;
  int m_ = 0;
  std::vector<Rational> values_;             // additive / capped
  int cap_ = 0;                              // capped
  int universe_ = 0;                         // coverage
  std::vector<Rational> elem_weights_;       // coverage
  std::vector<std::vector<int>> sets_;       // coverage
  std::vector<Rational> table_;              // table
  int table_m_ = 0;                          // table payload size, <= 16
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Additive valuation -> CappedAdditive with the given cap (cap >= 1).
Valuation capped_transform(const Valuation& v, int cap);

// max over S' subseteq S, |S'| <= cap of v(S'). Exhaustive; |S| <= 20.
Rational best_subset_value(const Valuation& v, std::span<const int> items, int cap);

// Exhaustive diminishing-marginals check; explicit tables only (the other
// kinds are submodular by construction).
bool is_submodular(const Valuation& v);

}  // namespace nswopt
