#include "instance.hpp"

#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace nswopt {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

int capacity_sum_of(const std::vector<int>& capacities) {
  return std::accumulate(capacities.begin(), capacities.end(), 0);
}

}  // namespace

int OneSidedInstance::capacity_sum() const { return capacity_sum_of(capacities); }
int TwoSidedInstance::capacity_sum() const { return capacity_sum_of(capacities); }

std::uint64_t OneSidedInstance::total_queries() const {
  std::uint64_t total = 0;
  for (const auto& v : valuations) total += v.query_count();
  return total;
}

void OneSidedInstance::reset_queries() const {
  for (const auto& v : valuations) v.reset_query_count();
}

std::uint64_t TwoSidedInstance::total_queries() const {
  std::uint64_t total = 0;
  for (const auto& v : firm_valuations) total += v.query_count();
  return total;
}

void TwoSidedInstance::reset_queries() const {
  for (const auto& v : firm_valuations) v.reset_query_count();
}

void OneSidedInstance::validate() const {
  if (num_agents() < 1) throw InputError("one-sided instance needs at least one agent");
  if (num_items < 0) throw InputError("negative item count");
  if (static_cast<int>(capacities.size()) != num_agents()) {
    throw InputError("capacities must have one entry per agent");
  }
  for (int c : capacities) {
    if (c < 1) throw InputError("capacities must be >= 1");
  }
  for (const auto& v : valuations) {
    if (v.num_items() != num_items) {
      throw InputError("valuation universe size must equal the item count");
    }
  }
}

void TwoSidedInstance::validate() const {
  if (num_firms() < 1) throw InputError("two-sided instance needs at least one firm");
  if (num_workers < 0) throw InputError("negative worker count");
  if (static_cast<int>(capacities.size()) != num_firms()) {
    throw InputError("capacities must have one entry per firm");
  }
  for (int c : capacities) {
    if (c < 1) throw InputError("capacities must be >= 1");
  }
  for (const auto& v : firm_valuations) {
    if (v.num_items() != num_workers) {
      throw InputError("firm valuation universe size must equal the worker count");
    }
  }
  if (static_cast<int>(worker_values.size()) != num_workers) {
    throw InputError("worker_values must have one row per worker");
  }
  for (const auto& row : worker_values) {
    if (static_cast<int>(row.size()) != num_firms()) {
      throw InputError("worker_values rows must have one entry per firm");
    }
    for (const auto& w : row) {
      if (w.is_negative()) throw InputError("worker values must be nonnegative");
    }
  }
  if (capacity_sum() < num_workers) {
    throw InputError("inadequate capacities: sum of c_i must be >= number of workers");
  }
  if (weights) {
    if (static_cast<int>(weights->firms.size()) != num_firms() ||
        static_cast<int>(weights->workers.size()) != num_workers) {
      throw InputError("weights must cover every firm and worker");
    }
    Rational sum;
    for (const auto& w : weights->firms) {
      if (w.is_negative()) throw InputError("weights must be nonnegative");
      sum += w;
    }
    for (const auto& w : weights->workers) {
      if (w.is_negative()) throw InputError("weights must be nonnegative");
      sum += w;
    }
    if (std::abs((sum - Rational(1)).to_double()) > kWeightSumTolerance) {
      throw InputError("weights must sum to 1");
    }
  }
}

}  // namespace nswopt
