#include "generator.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace nswopt {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw InputError("empty uniform range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::uniform01() {
  return (next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
  return rng.next();
}

namespace {

using nlohmann::json;

int field_int(const json& params, const char* key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!it->is_number_integer()) throw InputError(std::string(key) + " must be an integer");
  return it->get<int>();
}

int require_int(const json& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end()) throw InputError(std::string("gen: missing '") + key + "'");
  if (!it->is_number_integer()) throw InputError(std::string(key) + " must be an integer");
  return it->get<int>();
}

std::string field_str(const json& params, const char* key, const std::string& fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return it->get<std::string>();
}

// Random value with denominator <= 8; zero with probability ~1/25 when
// allowed so the zero-welfare paths get exercised.
Rational random_value(Rng& rng, bool allow_zero) {
  int num = rng.uniform(allow_zero ? 0 : 1, 24);
  int den = rng.uniform(1, 8);
  return Rational(num, den);
}

// Strictly greater than 1; the weighted pipeline wants log-positive values.
Rational random_value_above_one(Rng& rng) {
  int den = rng.uniform(1, 8);
  int num = rng.uniform(den + 1, 25 * den);
  return Rational(num, den);
}

Valuation random_valuation(Rng& rng, int m, const std::string& kind, bool allow_zero) {
  std::string pick = kind;
  if (pick == "mixed") {
    const char* kinds[] = {"additive", "capped", "coverage"};
    pick = kinds[rng.uniform(0, 2)];
  }
  if (pick == "additive" || pick == "capped") {
    std::vector<Rational> values;
    values.reserve(m);
    for (int j = 0; j < m; ++j) values.push_back(random_value(rng, allow_zero));
    if (pick == "additive") return Valuation::additive(std::move(values));
    int cap = rng.uniform(1, std::max(1, std::min(m, 4)));
    return Valuation::capped_additive(std::move(values), cap);
  }
  if (pick == "coverage") {
    int universe = m + 2;
    std::vector<Rational> weights;
    weights.reserve(universe);
    for (int e = 0; e < universe; ++e) weights.push_back(random_value(rng, false));
    std::vector<std::vector<int>> sets(m);
    for (int j = 0; j < m; ++j) {
      int size = rng.uniform(allow_zero ? 0 : 1, 3);
      std::vector<char> used(universe, 0);
      for (int s = 0; s < size; ++s) {
        int e = rng.uniform(0, universe - 1);
        if (!used[e]) {
          used[e] = 1;
          sets[j].push_back(e);
        }
      }
      std::sort(sets[j].begin(), sets[j].end());
    }
    return Valuation::weighted_coverage(universe, std::move(weights), std::move(sets));
  }
  throw InputError("unknown valuation kind '" + kind + "'");
}

std::vector<int> random_capacities(Rng& rng, int n, int lo, int hi, int min_total) {
  std::vector<int> caps(n);
  for (int& c : caps) c = rng.uniform(lo, hi);
  int total = 0;
  for (int c : caps) total += c;
  while (total < min_total) {
    ++caps[rng.uniform(0, n - 1)];
    ++total;
  }
  return caps;
}

Instance footnote_preset(const json& params) {
  int n = require_int(params, "n");
  int k = require_int(params, "k");
  int cap = field_int(params, "cap", 1);
  Rational c(5);
  if (params.contains("c")) c = rational_from_json(params["c"], "c");
  if (n < 1 || k < 1 || cap < 1) throw InputError("footnote preset needs n,k,cap >= 1");
  OneSidedInstance inst;
  inst.num_items = k * n;
  inst.capacities.assign(n, cap);
  std::vector<Rational> values(inst.num_items, c);
  for (int i = 0; i < n; ++i) inst.valuations.push_back(Valuation::additive(values));
  inst.validate();
  return Instance{std::move(inst)};
}

Instance example1_preset() {
  OneSidedInstance inst;
  inst.num_items = 4;
  inst.capacities = {2};
  inst.valuations.push_back(example1_valuation());
  inst.validate();
  return Instance{std::move(inst)};
}

Instance random_one_sided(const json& params) {
  int n = require_int(params, "n");
  int m = require_int(params, "m");
  Rng rng(static_cast<std::uint64_t>(field_int(params, "seed", 0)));
  std::string kind = field_str(params, "kind", "mixed");
  int cap_min = field_int(params, "cap_min", 1);
  int cap_max = field_int(params, "cap_max", 3);
  OneSidedInstance inst;
  inst.num_items = m;
  inst.capacities = random_capacities(rng, n, cap_min, cap_max, 0);
  for (int i = 0; i < n; ++i) {
    inst.valuations.push_back(random_valuation(rng, m, kind, true));
  }
  inst.validate();
  return Instance{std::move(inst)};
}

Instance random_two_sided(const json& params, bool weighted) {
  int n = require_int(params, "n");
  int m = require_int(params, "m");
  Rng rng(static_cast<std::uint64_t>(field_int(params, "seed", 0)));
  std::string kind = field_str(params, "kind", weighted ? "additive" : "mixed");
  if (weighted && kind != "additive") {
    throw InputError("weighted instances need additive firm valuations");
  }
  int cap_min = field_int(params, "cap_min", 1);
  int cap_max = field_int(params, "cap_max", 3);
  bool allow_zero = !weighted && field_int(params, "allow_zero", 1) != 0;

  TwoSidedInstance inst;
  inst.num_workers = m;
  inst.capacities = random_capacities(rng, n, cap_min, cap_max, m);
  for (int i = 0; i < n; ++i) {
    if (weighted) {
      std::vector<Rational> values;
      values.reserve(m);
      for (int j = 0; j < m; ++j) values.push_back(random_value_above_one(rng));
      inst.firm_valuations.push_back(Valuation::additive(std::move(values)));
    } else {
      inst.firm_valuations.push_back(random_valuation(rng, m, kind, allow_zero));
    }
  }
  inst.worker_values.assign(m, {});
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      inst.worker_values[j].push_back(weighted ? random_value_above_one(rng)
                                               : random_value(rng, allow_zero));
    }
  }
  if (weighted) {
    // Integer shares normalized by their total, so the sum is exactly 1.
    std::vector<int> shares(n + m);
    int total = 0;
    for (int& s : shares) {
      s = rng.uniform(1, 10);
      total += s;
    }
    NswWeights weights;
    for (int i = 0; i < n; ++i) weights.firms.push_back(Rational(shares[i], total));
    for (int j = 0; j < m; ++j) weights.workers.push_back(Rational(shares[n + j], total));
    inst.weights = std::move(weights);
  }
  inst.validate();
  return Instance{std::move(inst)};
}

}  // namespace

Valuation example1_valuation() {
  // Items w1..w4 map to 0..3. v is 0 on the empty set, 4 on {w2,w4}, 3 on
  // {w1,w3,w4}, and min(4, |S|+1) everywhere else.
  const uint32_t w2w4 = 0b1010;
  const uint32_t w1w3w4 = 0b1101;
  std::vector<Rational> table(16);
  for (uint32_t mask = 1; mask < 16; ++mask) {
    if (mask == w2w4) {
      table[mask] = Rational(4);
    } else if (mask == w1w3w4) {
      table[mask] = Rational(3);
    } else {
      table[mask] = Rational(std::min(4, std::popcount(mask) + 1));
    }
  }
  return Valuation::explicit_table(4, std::move(table));
}

Instance generate_instance(const json& params) {
  if (!params.is_object()) throw InputError("gen: expected a parameter object");
  std::string preset = field_str(params, "preset", "");
  if (preset == "footnote") return footnote_preset(params);
  if (preset == "example1") return example1_preset();
  if (!preset.empty()) throw InputError("unknown preset '" + preset + "'");

  std::string family = field_str(params, "family", "");
  if (family == "one-sided") return random_one_sided(params);
  if (family == "two-sided") return random_two_sided(params, false);
  if (family == "weighted") return random_two_sided(params, true);
  throw InputError("gen: need a 'preset' or a 'family'");
}

}  // namespace nswopt
