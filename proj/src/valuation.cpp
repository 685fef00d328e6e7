#include "valuation.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace nswopt {

namespace {

void require_nonnegative(const std::vector<Rational>& values, const char* what) {
  for (const Rational& v : values) {
    if (v.is_negative()) throw InputError(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

Valuation::Valuation(const Valuation& other)
    : kind_(other.kind_),
      m_(other.m_),
      values_(other.values_),
      cap_(other.cap_),
      universe_(other.universe_),
      elem_weights_(other.elem_weights_),
      sets_(other.sets_),
      table_(other.table_),
      table_m_(other.table_m_),
      queries_(other.queries_.load(std::memory_order_relaxed)) {}

Valuation& Valuation::operator=(const Valuation& other) {
  if (this == &other) return *this;
  kind_ = other.kind_;
  m_ = other.m_;
  values_ = other.values_;
  cap_ = other.cap_;
  universe_ = other.universe_;
  elem_weights_ = other.elem_weights_;
  sets_ = other.sets_;
  table_ = other.table_;
  table_m_ = other.table_m_;
  queries_.store(other.queries_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

Valuation::Valuation(Valuation&& other) noexcept
    : kind_(other.kind_),
      m_(other.m_),
      values_(std::move(other.values_)),
      cap_(other.cap_),
      universe_(other.universe_),
      elem_weights_(std::move(other.elem_weights_)),
      sets_(std::move(other.sets_)),
      table_(std::move(other.table_)),
      table_m_(other.table_m_),
      queries_(other.queries_.load(std::memory_order_relaxed)) {}

Valuation& Valuation::operator=(Valuation&& other) noexcept {
  kind_ = other.kind_;
  m_ = other.m_;
  values_ = std::move(other.values_);
  cap_ = other.cap_;
  universe_ = other.universe_;
  elem_weights_ = std::move(other.elem_weights_);
  sets_ = std::move(other.sets_);
  table_ = std::move(other.table_);
  table_m_ = other.table_m_;
  queries_.store(other.queries_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

Valuation Valuation::additive(std::vector<Rational> values) {
  require_nonnegative(values, "additive values");
  Valuation v;
  v.kind_ = Kind::kAdditive;
  v.m_ = static_cast<int>(values.size());
  v.values_ = std::move(values);
  return v;
}

Valuation Valuation::capped_additive(std::vector<Rational> values, int cap) {
  if (cap < 1) throw InputError("capped valuation needs cap >= 1");
  require_nonnegative(values, "capped values");
  Valuation v;
  v.kind_ = Kind::kCappedAdditive;
  v.m_ = static_cast<int>(values.size());
  v.values_ = std::move(values);
  v.cap_ = cap;
  return v;
}

Valuation Valuation::weighted_coverage(int universe, std::vector<Rational> elem_weights,
                                       std::vector<std::vector<int>> sets) {
  if (universe < 0) throw InputError("coverage universe must be nonnegative");
  if (static_cast<int>(elem_weights.size()) != universe) {
    throw InputError("coverage weights must have one entry per element");
  }
  require_nonnegative(elem_weights, "coverage weights");
  for (const auto& set : sets) {
    for (int e : set) {
      if (e < 0 || e >= universe) throw InputError("coverage set element out of range");
    }
  }
  Valuation v;
  v.kind_ = Kind::kWeightedCoverage;
  v.m_ = static_cast<int>(sets.size());
  v.universe_ = universe;
  v.elem_weights_ = std::move(elem_weights);
  v.sets_ = std::move(sets);
  return v;
}

Valuation Valuation::explicit_table(int m, std::vector<Rational> table) {
  if (m < 0 || m > 16) throw InputError("explicit table limited to m <= 16");
  if (table.size() != (size_t{1} << m)) {
    throw InputError("explicit table must have 2^m entries");
  }
  require_nonnegative(table, "table values");
  if (!table[0].is_zero()) throw InputError("explicit table must be normalized: v(empty) = 0");
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    for (int j = 0; j < m; ++j) {
      if (mask & (uint32_t{1} << j)) continue;
      if (table[mask] > table[mask | (uint32_t{1} << j)]) {
        throw InputError("explicit table must be monotone");
      }
    }
  }
  Valuation v;
  v.kind_ = Kind::kExplicitTable;
  v.m_ = m;
  v.table_ = std::move(table);
  v.table_m_ = m;
  return v;
}

void Valuation::check_items(std::span<const int> items) const {
  for (int j : items) {
    if (j < 0 || j >= m_) throw InputError("item index out of range in value query");
  }
}

Rational Valuation::value(std::span<const int> items) const {
  check_items(items);
  queries_.fetch_add(1, std::memory_order_relaxed);
  return value_impl(items);
}

Rational Valuation::value_impl(std::span<const int> items) const {
  switch (kind_) {
    case Kind::kAdditive: {
      Rational total;
      for (int j : items) total += values_[j];
      return total;
    }
    case Kind::kCappedAdditive: {
      if (static_cast<int>(items.size()) <= cap_) {
        Rational total;
        for (int j : items) total += values_[j];
        return total;
      }
      std::vector<Rational> picked;
      picked.reserve(items.size());
      for (int j : items) picked.push_back(values_[j]);
      std::partial_sort(picked.begin(), picked.begin() + cap_, picked.end(),
                        [](const Rational& a, const Rational& b) { return b < a; });
      Rational total;
      for (int i = 0; i < cap_; ++i) total += picked[i];
      return total;
    }
    case Kind::kWeightedCoverage: {
      std::vector<char> covered(universe_, 0);
      Rational total;
      for (int j : items) {
        for (int e : sets_[j]) {
          if (!covered[e]) {
            covered[e] = 1;
            total += elem_weights_[e];
          }
        }
      }
      return total;
    }
    case Kind::kExplicitTable: {
      uint32_t mask = 0;
      for (int j : items) {
        if (j < table_m_) mask |= uint32_t{1} << j;
      }
      return table_[mask];
    }
  }
  throw InputError("unknown valuation kind");
}

Rational Valuation::value_of_item(int item) const {
  return value(std::span<const int>(&item, 1));
}

Valuation Valuation::zero_extended(int new_m) const {
  if (new_m < m_) throw InputError("zero_extended cannot shrink a valuation");
  Valuation v(*this);
  v.m_ = new_m;
  switch (kind_) {
    case Kind::kAdditive:
    case Kind::kCappedAdditive:
      v.values_.resize(new_m, Rational(0));
      break;
    case Kind::kWeightedCoverage:
      v.sets_.resize(new_m);
      break;
    case Kind::kExplicitTable:
      break;  // items past table_m_ already count for nothing
  }
  return v;
}

Valuation capped_transform(const Valuation& v, int cap) {
  if (v.kind() != Valuation::Kind::kAdditive) {
    throw InputError("capped_transform expects an additive valuation");
  }
  if (cap < 1) throw InputError("capped_transform needs cap >= 1");
  return Valuation::capped_additive(v.item_values(), cap);
}

Rational best_subset_value(const Valuation& v, std::span<const int> items, int cap) {
  if (cap < 1) throw InputError("best_subset_value needs cap >= 1");
  const int k = static_cast<int>(items.size());
  if (k > 20) throw InputError("best_subset_value is exhaustive; |S| <= 20 required");
  Rational best;  // v(empty) = 0
  std::vector<int> subset;
  subset.reserve(k);
  for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) > cap) continue;
    subset.clear();
    for (int i = 0; i < k; ++i) {
      if (mask & (uint32_t{1} << i)) subset.push_back(items[i]);
    }
    Rational val = v.value(subset);
    if (val > best) best = val;
  }
  return best;
}

bool is_submodular(const Valuation& v) {
  if (v.kind() != Valuation::Kind::kExplicitTable) {
    throw InputError("is_submodular checks explicit tables only");
  }
  const int m = v.table_items();
  const auto& table = v.table();
  // Pairwise characterization: v(S+i) + v(S+j) >= v(S+i+j) + v(S) for all
  // S and distinct i,j outside S.
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    for (int i = 0; i < m; ++i) {
      if (mask & (uint32_t{1} << i)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (mask & (uint32_t{1} << j)) continue;
        uint32_t with_i = mask | (uint32_t{1} << i);
        uint32_t with_j = mask | (uint32_t{1} << j);
        uint32_t with_both = with_i | (uint32_t{1} << j);
        if (table[with_i] + table[with_j] < table[with_both] + table[mask]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace nswopt
