#include "json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace nswopt {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int int_from_json(const json& node, const std::string& where) {
  if (!node.is_number_integer()) throw InputError(where + ": expected an integer");
  return node.get<int>();
}

std::vector<Rational> rational_vector(const json& node, const std::string& where) {
  if (!node.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (size_t i = 0; i < node.size(); ++i) {
    out.push_back(rational_from_json(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Valuation valuation_from_json(const json& node, int m, const std::string& where) {
  if (!node.is_object()) throw InputError(where + ": expected an object");
  std::string kind = require(node, "kind").get<std::string>();
  try {
    if (kind == "additive" || kind == "capped") {
      auto values = rational_vector(require(node, "values"), where + ".values");
      if (static_cast<int>(values.size()) != m) {
        throw InputError(where + ": values must have m entries");
      }
      if (kind == "additive") return Valuation::additive(std::move(values));
      int cap = int_from_json(require(node, "cap"), where + ".cap");
      return Valuation::capped_additive(std::move(values), cap);
    }
    if (kind == "coverage") {
      int universe = int_from_json(require(node, "universe"), where + ".universe");
      auto weights = rational_vector(require(node, "weights"), where + ".weights");
      const json& sets_node = require(node, "sets");
      if (!sets_node.is_array() || static_cast<int>(sets_node.size()) != m) {
        throw InputError(where + ".sets: expected m arrays");
      }
      std::vector<std::vector<int>> sets;
      sets.reserve(m);
      for (const auto& set_node : sets_node) {
        if (!set_node.is_array()) throw InputError(where + ".sets: expected arrays");
        std::vector<int> set;
        for (const auto& e : set_node) set.push_back(int_from_json(e, where + ".sets"));
        sets.push_back(std::move(set));
      }
      return Valuation::weighted_coverage(universe, std::move(weights), std::move(sets));
    }
    if (kind == "table") {
      auto values = rational_vector(require(node, "values"), where + ".values");
      return Valuation::explicit_table(m, std::move(values));
    }
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": unknown valuation kind '" + kind + "'");
}

json valuation_to_json(const Valuation& v) {
  json node;
  switch (v.kind()) {
    case Valuation::Kind::kAdditive:
    case Valuation::Kind::kCappedAdditive: {
      node["kind"] = v.kind() == Valuation::Kind::kAdditive ? "additive" : "capped";
      json values = json::array();
      for (const auto& x : v.item_values()) values.push_back(rational_to_json(x));
      node["values"] = std::move(values);
      if (v.kind() == Valuation::Kind::kCappedAdditive) node["cap"] = v.cap();
      break;
    }
    case Valuation::Kind::kWeightedCoverage: {
      node["kind"] = "coverage";
      node["universe"] = v.coverage_universe();
      json weights = json::array();
      for (const auto& x : v.element_weights()) weights.push_back(rational_to_json(x));
      node["weights"] = std::move(weights);
      node["sets"] = v.item_sets();
      break;
    }
    case Valuation::Kind::kExplicitTable: {
      node["kind"] = "table";
      json values = json::array();
      for (const auto& x : v.table()) values.push_back(rational_to_json(x));
      node["values"] = std::move(values);
      break;
    }
  }
  return node;
}

bool same_valuation(const Valuation& a, const Valuation& b) {
  if (a.kind() != b.kind() || a.num_items() != b.num_items()) return false;
  switch (a.kind()) {
    case Valuation::Kind::kAdditive:
      return a.item_values() == b.item_values();
    case Valuation::Kind::kCappedAdditive:
      return a.cap() == b.cap() && a.item_values() == b.item_values();
    case Valuation::Kind::kWeightedCoverage:
      return a.coverage_universe() == b.coverage_universe() &&
             a.element_weights() == b.element_weights() && a.item_sets() == b.item_sets();
    case Valuation::Kind::kExplicitTable:
      return a.table() == b.table();
  }
  return false;
}

}  // namespace

json rational_to_json(const Rational& r) {
  static const BigInt kInt64Max = BigInt(std::numeric_limits<long long>::max());
  if (r.denominator() == 1 && boost::multiprecision::abs(r.numerator()) <= kInt64Max) {
    return json(r.numerator().convert_to<long long>());
  }
  return json(r.str());
}

Rational rational_from_json(const json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(node.get<long long>());
  if (node.is_number_unsigned()) return Rational(static_cast<long long>(node.get<unsigned long long>()));
  if (node.is_string()) {
    try {
      return Rational::parse(node.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

Instance load_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  std::string model = require(doc, "model").get<std::string>();
  int n = int_from_json(require(doc, "n"), "n");
  int m = int_from_json(require(doc, "m"), "m");
  const json& caps_node = require(doc, "capacities");
  if (!caps_node.is_array() || static_cast<int>(caps_node.size()) != n) {
    throw InputError("capacities: expected n integers");
  }
  std::vector<int> capacities;
  for (const auto& c : caps_node) capacities.push_back(int_from_json(c, "capacities"));

  const json& vals_node = require(doc, "valuations");
  if (!vals_node.is_array() || static_cast<int>(vals_node.size()) != n) {
    throw InputError("valuations: expected n entries");
  }
  std::vector<Valuation> valuations;
  valuations.reserve(n);
  for (int i = 0; i < n; ++i) {
    valuations.push_back(
        valuation_from_json(vals_node[i], m, "valuations[" + std::to_string(i) + "]"));
  }

  if (model == "one-sided") {
    if (doc.contains("worker_values") || doc.contains("weights")) {
      throw InputError("one-sided instances take no worker_values or weights");
    }
    OneSidedInstance inst;
    inst.valuations = std::move(valuations);
    inst.capacities = std::move(capacities);
    inst.num_items = m;
    inst.validate();
    return Instance{std::move(inst)};
  }
  if (model != "two-sided") throw InputError("model must be 'one-sided' or 'two-sided'");

  TwoSidedInstance inst;
  inst.firm_valuations = std::move(valuations);
  inst.capacities = std::move(capacities);
  inst.num_workers = m;
  const json& wv_node = require(doc, "worker_values");
  if (!wv_node.is_array() || static_cast<int>(wv_node.size()) != m) {
    throw InputError("worker_values: expected m rows");
  }
  for (int j = 0; j < m; ++j) {
    inst.worker_values.push_back(
        rational_vector(wv_node[j], "worker_values[" + std::to_string(j) + "]"));
  }
  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    NswWeights weights;
    weights.firms = rational_vector(require(w, "firms"), "weights.firms");
    weights.workers = rational_vector(require(w, "workers"), "weights.workers");
    inst.weights = std::move(weights);
  }
  inst.validate();
  return Instance{std::move(inst)};
}

Instance load_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return load_instance(doc);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance_text(buf.str());
}

json save_instance(const Instance& inst) {
  json doc;
  if (inst.is_one_sided()) {
    const auto& one = inst.one_sided();
    doc["model"] = "one-sided";
    doc["n"] = one.num_agents();
    doc["m"] = one.num_items;
    doc["capacities"] = one.capacities;
    json vals = json::array();
    for (const auto& v : one.valuations) vals.push_back(valuation_to_json(v));
    doc["valuations"] = std::move(vals);
    return doc;
  }
  const auto& two = inst.two_sided();
  doc["model"] = "two-sided";
  doc["n"] = two.num_firms();
  doc["m"] = two.num_workers;
  doc["capacities"] = two.capacities;
  json vals = json::array();
  for (const auto& v : two.firm_valuations) vals.push_back(valuation_to_json(v));
  doc["valuations"] = std::move(vals);
  json rows = json::array();
  for (const auto& row : two.worker_values) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    rows.push_back(std::move(r));
  }
  doc["worker_values"] = std::move(rows);
  if (two.weights) {
    json firms = json::array();
    for (const auto& x : two.weights->firms) firms.push_back(rational_to_json(x));
    json workers = json::array();
    for (const auto& x : two.weights->workers) workers.push_back(rational_to_json(x));
    doc["weights"] = {{"firms", std::move(firms)}, {"workers", std::move(workers)}};
  }
  return doc;
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << save_instance(inst).dump(2) << "\n";
}

bool same_instance(const Instance& a, const Instance& b) {
  if (a.is_one_sided() != b.is_one_sided()) return false;
  if (a.is_one_sided()) {
    const auto& x = a.one_sided();
    const auto& y = b.one_sided();
    if (x.num_items != y.num_items || x.capacities != y.capacities) return false;
    if (x.num_agents() != y.num_agents()) return false;
    for (int i = 0; i < x.num_agents(); ++i) {
      if (!same_valuation(x.valuations[i], y.valuations[i])) return false;
    }
    return true;
  }
  const auto& x = a.two_sided();
  const auto& y = b.two_sided();
  if (x.num_workers != y.num_workers || x.capacities != y.capacities) return false;
  if (x.num_firms() != y.num_firms() || x.worker_values != y.worker_values) return false;
  for (int i = 0; i < x.num_firms(); ++i) {
    if (!same_valuation(x.firm_valuations[i], y.firm_valuations[i])) return false;
  }
  if (x.weights.has_value() != y.weights.has_value()) return false;
  if (x.weights && (x.weights->firms != y.weights->firms ||
                    x.weights->workers != y.weights->workers)) {
    return false;
  }
  return true;
}

json allocation_to_json(const Allocation& alloc) {
  json bundles = json::array();
  for (const auto& bundle : alloc.bundles) bundles.push_back(bundle);
  return json{{"bundles", std::move(bundles)}};
}

json matching_to_json(const Matching& mu) {
  return json{{"worker_to_firm", mu.worker_to_firm}};
}

}  // namespace nswopt
