#pragma once

#include <cstdint>

#include <json.hpp>

#include "json_io.hpp"

namespace nswopt {

// Deterministic splitmix64 stream; self-contained so generated files are
// byte-identical across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive bounds
  double uniform01();

 private:
  std::uint64_t state_;
};

// Derives an independent stream for (seed, index) pairs, e.g. rounding trials.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Builds an instance from generator parameters:
//   {"preset":"footnote","n":3,"k":2,"c":"5","cap":1}
//   {"preset":"example1"}
//   {"family":"one-sided","n":3,"m":6,"kind":"additive","seed":7,
//    "cap_min":1,"cap_max":3}
//   {"family":"two-sided","n":2,"m":5,"kind":"capped","seed":7,...}
//   {"family":"weighted","n":2,"m":4,"seed":7}   (additive firms + weights)
// Kinds: additive | capped | coverage | mixed. Values are rationals with
// small denominators; the weighted family keeps every value above 1.
Instance generate_instance(const nlohmann::json& params);

// The four-item submodular table whose best-subset transform is not
// submodular; used as a fixture throughout the tests.
Valuation example1_valuation();

}  // namespace nswopt
