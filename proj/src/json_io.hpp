#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "allocation.hpp"
#include "instance.hpp"

namespace nswopt {

// A loaded instance file: exactly one of the two models.
struct Instance {
  std::variant<OneSidedInstance, TwoSidedInstance> data;

  bool is_one_sided() const { return std::holds_alternative<OneSidedInstance>(data); }
  const OneSidedInstance& one_sided() const { return std::get<OneSidedInstance>(data); }
  const TwoSidedInstance& two_sided() const { return std::get<TwoSidedInstance>(data); }
};

// Schema:
//   {"model":"one-sided"|"two-sided", "n":int, "m":int, "capacities":[int],
//    "valuations":[...], "worker_values":[["p/q",...]]?, "weights":{...}?}
// Valuations: {"kind":"additive","values":[...]} |
//             {"kind":"capped","values":[...],"cap":k} |
//             {"kind":"coverage","universe":u,"weights":[...],"sets":[[...]]} |
//             {"kind":"table","values":[... 2^m entries by subset bitmask]}
// All numbers are "p/q" strings or plain integers.
Instance load_instance(const nlohmann::json& doc);
Instance load_instance_text(const std::string& text);
Instance load_instance_file(const std::string& path);

nlohmann::json save_instance(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& node, const std::string& where);

// Structural equality, ignoring query counters.
bool same_instance(const Instance& a, const Instance& b);

// Solution serialization helpers shared by the C API and the CLI.
nlohmann::json allocation_to_json(const Allocation& alloc);
nlohmann::json matching_to_json(const Matching& mu);

}  // namespace nswopt
