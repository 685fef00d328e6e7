#include "nswopt.h"

#include <cstring>
#include <memory>
#include <string>

#include "brute_force.hpp"
#include "conf_lp.hpp"
#include "errors.hpp"
#include "generator.hpp"
#include "json_io.hpp"
#include "one_sided_solver.hpp"
#include "rounding.hpp"
#include "two_sided_solver.hpp"
#include "verify.hpp"
#include "weighted_solver.hpp"

struct nsw_instance {
  nswopt::Instance inst;
};

struct nsw_result {
  nlohmann::json doc;
  double objective = 0.0;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

nsw_status fail(nsw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
nsw_status guarded(Fn&& fn) {
  try {
    fn();
    return NSW_OK;
  } catch (const nswopt::InfeasibleError& e) {
    return fail(NSW_ERROR_INFEASIBLE, e.what());
  } catch (const nswopt::ResourceError& e) {
    return fail(NSW_ERROR_RESOURCE, e.what());
  } catch (const nswopt::InputError& e) {
    return fail(NSW_ERROR_INVALID_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(NSW_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

struct SolveOptions {
  std::string alg;
  double eps = 0.1;
  std::uint64_t seed = 0;
  int trials = 100;
  long long budget = -1;
};

SolveOptions parse_options(const char* options_json, bool need_alg) {
  SolveOptions opts;
  if (options_json != nullptr && options_json[0] != '\0') {
    json doc;
    try {
      doc = json::parse(options_json);
    } catch (const json::parse_error& e) {
      throw nswopt::InputError(std::string("invalid options JSON: ") + e.what());
    }
    if (!doc.is_object()) throw nswopt::InputError("options must be a JSON object");
    if (doc.contains("alg")) opts.alg = doc["alg"].get<std::string>();
    if (doc.contains("eps")) opts.eps = doc["eps"].get<double>();
    if (doc.contains("seed")) opts.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("trials")) opts.trials = doc["trials"].get<int>();
    if (doc.contains("budget")) opts.budget = doc["budget"].get<long long>();
  }
  if (need_alg && opts.alg.empty()) throw nswopt::InputError("options need an \"alg\" field");
  return opts;
}

const nswopt::OneSidedInstance& require_one_sided(const nswopt::Instance& inst,
                                                  const std::string& alg) {
  if (!inst.is_one_sided()) {
    throw nswopt::InputError("algorithm '" + alg + "' needs a one-sided instance");
  }
  return inst.one_sided();
}

const nswopt::TwoSidedInstance& require_two_sided(const nswopt::Instance& inst,
                                                  const std::string& alg) {
  if (inst.is_one_sided()) {
    throw nswopt::InputError("algorithm '" + alg + "' needs a two-sided instance");
  }
  return inst.two_sided();
}

json one_sided_result_json(const nswopt::OneSidedResult& res) {
  const auto& d = res.diag;
  return json{{"model", "one-sided"},
              {"alg", "one-sided"},
              {"nsw", d.nsw},
              {"solution", nswopt::allocation_to_json(res.allocation)},
              {"diagnostics",
               {{"swaps", d.swaps},
                {"iterations_bound", d.iterations_bound},
                {"queries", d.queries},
                {"phase_ms", {d.phase_ms[0], d.phase_ms[1], d.phase_ms[2]}},
                {"nsw", d.nsw},
                {"zero_welfare", d.zero_welfare},
                {"eps_bar", d.eps_bar},
                {"eps_hat", d.eps_hat},
                {"exact_items", d.exact_items}}}};
}

json two_sided_result_json(const nswopt::TwoSidedResult& res) {
  const auto& d = res.diag;
  return json{{"model", "two-sided"},
              {"alg", "two-sided"},
              {"nsw", d.nsw},
              {"solution", nswopt::matching_to_json(res.matching)},
              {"diagnostics",
               {{"surrogate", d.surrogate},
                {"ln_surrogate", d.ln_surrogate},
                {"nsw", d.nsw},
                {"x_ratio", d.x_ratio},
                {"bound", d.bound},
                {"flow_cost", d.flow_cost},
                {"augmentations", d.augmentations},
                {"queries", d.queries},
                {"zero_welfare", d.zero_welfare},
                {"certificate_ok", d.certificate_ok},
                {"main_worker", res.main_worker}}}};
}

json weighted_result_json(const nswopt::TwoSidedInstance& inst,
                          const nswopt::WeightedResult& res) {
  json columns = json::array();
  json trials = json::array();
  for (const auto& t : res.diag.trials) {
    trials.push_back({{"seed", t.seed}, {"ln_nsw", t.ln_nsw}});
  }
  const char* status = res.diag.lp_status == nswopt::ConfLpStatus::kOk ? "ok"
                       : res.diag.lp_status == nswopt::ConfLpStatus::kZeroOptimum
                           ? "zero_optimum"
                           : "column_cap";
  return json{{"model", "two-sided"},
              {"alg", "weighted"},
              {"nsw", res.diag.nsw},
              {"solution", nswopt::matching_to_json(res.matching)},
              {"diagnostics",
               {{"lp_objective", res.diag.lp_objective},
                {"lp_status", status},
                {"columns", res.diag.columns},
                {"oracle_calls", res.diag.oracle_calls},
                {"x_marginals", res.x},
                {"trials", trials},
                {"floor_bound", res.diag.floor_bound},
                {"best_ln_nsw", res.diag.best_ln_nsw},
                {"used_seed_fallback", res.diag.used_seed_fallback},
                {"nsw_two_sided", nswopt::nsw_two_sided(inst, res.matching)}}}};
}

json dispatch_solve(const nswopt::Instance& inst, const SolveOptions& opts, double* objective) {
  if (opts.alg == "one-sided") {
    auto res = nswopt::solve_one_sided(require_one_sided(inst, opts.alg), opts.eps);
    *objective = res.diag.nsw;
    return one_sided_result_json(res);
  }
  if (opts.alg == "two-sided") {
    auto res = nswopt::solve_two_sided(require_two_sided(inst, opts.alg));
    *objective = res.diag.nsw;
    return two_sided_result_json(res);
  }
  if (opts.alg == "ptas") {
    auto res = nswopt::solve_two_sided_ptas(require_two_sided(inst, opts.alg), opts.eps);
    *objective = res.nsw;
    return json{{"model", "two-sided"},
                {"alg", "ptas"},
                {"nsw", res.nsw},
                {"solution", nswopt::matching_to_json(res.matching)},
                {"diagnostics", {{"used_enumeration", res.used_enumeration}}}};
  }
  if (opts.alg == "weighted") {
    const auto& two = require_two_sided(inst, opts.alg);
    auto res = nswopt::solve_weighted(two, opts.eps, opts.trials, opts.seed);
    *objective = res.diag.nsw;
    return weighted_result_json(two, res);
  }
  if (opts.alg == "combined") {
    const auto& two = require_two_sided(inst, opts.alg);
    auto res = nswopt::solve_unweighted_best(two, opts.eps, opts.trials, opts.seed);
    *objective = res.nsw;
    return json{{"model", "two-sided"},
                {"alg", "combined"},
                {"nsw", res.nsw},
                {"solution", nswopt::matching_to_json(res.matching)},
                {"diagnostics",
                 {{"branch", res.branch},
                  {"flow_nsw", res.flow_nsw},
                  {"weighted_nsw", res.weighted_nsw},
                  {"bound", res.bound}}}};
  }
  throw nswopt::InputError("unknown algorithm '" + opts.alg + "'");
}

json dispatch_exact(const nswopt::Instance& inst, const SolveOptions& opts, double* objective) {
  if (inst.is_one_sided()) {
    auto res = nswopt::exact_one_sided(inst.one_sided(), opts.budget);
    *objective = res.nsw;
    return json{{"model", "one-sided"},
                {"alg", "exact"},
                {"exact", true},
                {"nsw", res.nsw},
                {"product", res.product.str()},
                {"solution", nswopt::allocation_to_json(res.allocation)},
                {"diagnostics", {{"states", res.states}}}};
  }
  const auto& two = inst.two_sided();
  if (two.weights && opts.alg != "two-sided") {
    auto res = nswopt::exact_weighted(two, opts.budget);
    *objective = res.nsw;
    return json{{"model", "two-sided"},
                {"alg", "exact-weighted"},
                {"exact", true},
                {"nsw", res.nsw},
                {"ln_nsw", res.ln_nsw},
                {"solution", nswopt::matching_to_json(res.matching)},
                {"diagnostics", {{"states", res.states}}}};
  }
  auto res = nswopt::exact_two_sided(two, opts.budget);
  *objective = res.nsw;
  return json{{"model", "two-sided"},
              {"alg", "exact"},
              {"exact", true},
              {"nsw", res.nsw},
              {"product", res.product.str()},
              {"solution", nswopt::matching_to_json(res.matching)},
              {"diagnostics", {{"states", res.states}}}};
}

json dispatch_verify(const nswopt::Instance& inst, const SolveOptions& opts, double* objective) {
  json checks = json::array();
  auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  };
  double nsw = 0.0;

  if (opts.alg == "one-sided" || (opts.alg.empty() && inst.is_one_sided())) {
    const auto& one = require_one_sided(inst, "one-sided");
    auto run = nswopt::solve_one_sided_run(one, opts.eps);
    nsw = run.result.diag.nsw;
    add_check("allocation_feasible", run.result.allocation.is_feasible(one), "");
    if (!run.result.diag.zero_welfare) {
      nswopt::SwapWitness witness;
      bool ok = nswopt::verify_no_improving_swap(run.state, &witness);
      add_check("local_optimality", ok, ok ? "" : witness.describe());
      nswopt::PriceTable prices = nswopt::compute_prices(run.state);
      bool bounded = true;
      std::string detail;
      for (const auto& [key, price] : prices.positive) {
        if (price > nswopt::Rational(1)) {
          bounded = false;
          detail = "price above 1 at (" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + ")";
          break;
        }
      }
      add_check("prices_within_unit", bounded, detail);
    }
  } else if (opts.alg == "weighted") {
    const auto& two = require_two_sided(inst, opts.alg);
    auto lp = nswopt::solve_conf_lp(two, opts.eps);
    if (lp.status == nswopt::ConfLpStatus::kZeroOptimum) {
      add_check("zero_optimum", true, "no matching keeps all weighted factors nonzero");
    } else {
      std::vector<double> eta, zeta;
      for (const auto& w : two.weights->firms) eta.push_back(w.to_double());
      for (const auto& w : two.weights->workers) zeta.push_back(w.to_double());
      nswopt::DualViolationWitness witness;
      bool ok = nswopt::verify_dual_feasible(two, eta, zeta, lp.alpha, lp.beta, opts.eps,
                                             &witness);
      add_check("dual_feasible", ok, ok ? "" : witness.describe());

      bool loads_ok = true;
      std::string detail;
      for (int t = 0; t < 200 && loads_ok; ++t) {
        nswopt::Rng rng(nswopt::derive_seed(opts.seed, t));
        nswopt::Matching mu = nswopt::dependent_rounding(lp.x, rng);
        auto loads = mu.firm_loads(two.num_firms());
        for (int i = 0; i < two.num_firms(); ++i) {
          double sum = 0.0;
          for (int j = 0; j < two.num_workers; ++j) sum += lp.x[i][j];
          if (static_cast<double>(loads[i].size()) > std::ceil(sum - 1e-9)) {
            loads_ok = false;
            detail = "firm " + std::to_string(i) + " overloaded in a rounding draw";
          }
        }
      }
      add_check("rounding_load_ceiling", loads_ok, detail);
    }
    auto res = nswopt::solve_weighted(two, opts.eps, opts.trials, opts.seed);
    nsw = res.diag.nsw;
  } else {
    const auto& two = require_two_sided(inst, opts.alg.empty() ? "two-sided" : opts.alg);
    auto res = nswopt::solve_two_sided(two);
    nsw = res.diag.nsw;
    res.matching.validate(two);
    add_check("matching_feasible", true, "");
    if (!res.diag.zero_welfare) {
      nswopt::TwoSidedNetwork network = nswopt::build_network(two);
      nswopt::FlowResult flow = nswopt::solve_min_cost_flow(network.net);
      nswopt::CycleWitness witness;
      bool ok = nswopt::verify_flow_optimal(network.net, flow.flow, 1e-7, &witness);
      add_check("flow_optimality", ok, ok ? "" : witness.describe());

      // Favorite-worker surrogate never exceeds the realized utilities.
      bool dominance = true;
      auto loads = res.matching.firm_loads(two.num_firms());
      for (int i = 0; i < two.num_firms(); ++i) {
        if (two.firm_valuations[i].value(loads[i]) <
            two.firm_valuations[i].value_of_item(res.main_worker[i])) {
          dominance = false;
        }
      }
      add_check("surrogate_dominance", dominance, "");
    }
  }

  bool all_pass = true;
  for (const auto& check : checks) {
    if (!check["pass"].get<bool>()) all_pass = false;
  }
  *objective = nsw;
  return json{{"alg", opts.alg.empty() ? "auto" : opts.alg},
              {"nsw", nsw},
              {"checks", checks},
              {"all_pass", all_pass}};
}

}  // namespace

extern "C" {

nsw_status nsw_instance_from_json(const char* json_text, nsw_instance** out) {
  if (json_text == nullptr || out == nullptr) {
    return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  }
  return guarded([&] { *out = new nsw_instance{nswopt::load_instance_text(json_text)}; });
}

nsw_status nsw_instance_from_file(const char* path, nsw_instance** out) {
  if (path == nullptr || out == nullptr) {
    return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  }
  return guarded([&] { *out = new nsw_instance{nswopt::load_instance_file(path)}; });
}

nsw_status nsw_instance_generate(const char* params_json, nsw_instance** out) {
  if (params_json == nullptr || out == nullptr) {
    return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  }
  return guarded([&] {
    json params = json::parse(params_json, nullptr, false);
    if (params.is_discarded()) throw nswopt::InputError("invalid generator JSON");
    *out = new nsw_instance{nswopt::generate_instance(params)};
  });
}

nsw_status nsw_instance_to_json(const nsw_instance* inst, char** out_json) {
  if (inst == nullptr || out_json == nullptr) {
    return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  }
  return guarded([&] { *out_json = copy_string(nswopt::save_instance(inst->inst).dump(2)); });
}

void nsw_instance_free(nsw_instance* inst) { delete inst; }

nsw_status nsw_solve(const nsw_instance* inst, const char* options_json, nsw_result** out) {
  if (inst == nullptr || out == nullptr) return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  return guarded([&] {
    SolveOptions opts = parse_options(options_json, true);
    auto result = std::make_unique<nsw_result>();
    result->doc = dispatch_solve(inst->inst, opts, &result->objective);
    *out = result.release();
  });
}

nsw_status nsw_exact(const nsw_instance* inst, const char* options_json, nsw_result** out) {
  if (inst == nullptr || out == nullptr) return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  return guarded([&] {
    SolveOptions opts = parse_options(options_json, false);
    auto result = std::make_unique<nsw_result>();
    result->doc = dispatch_exact(inst->inst, opts, &result->objective);
    *out = result.release();
  });
}

nsw_status nsw_verify(const nsw_instance* inst, const char* options_json, nsw_result** out) {
  if (inst == nullptr || out == nullptr) return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  return guarded([&] {
    SolveOptions opts = parse_options(options_json, false);
    auto result = std::make_unique<nsw_result>();
    result->doc = dispatch_verify(inst->inst, opts, &result->objective);
    *out = result.release();
  });
}

nsw_status nsw_result_to_json(const nsw_result* result, char** out_json) {
  if (result == nullptr || out_json == nullptr) {
    return fail(NSW_ERROR_INVALID_INPUT, "null argument");
  }
  return guarded([&] { *out_json = copy_string(result->doc.dump(2)); });
}

double nsw_result_objective(const nsw_result* result) {
  return result == nullptr ? 0.0 : result->objective;
}

void nsw_result_free(nsw_result* result) { delete result; }

const char* nsw_last_error(void) { return g_last_error.c_str(); }

const char* nsw_status_name(nsw_status status) {
  switch (status) {
    case NSW_OK:
      return "ok";
    case NSW_ERROR_INVALID_INPUT:
      return "invalid input";
    case NSW_ERROR_INFEASIBLE:
      return "infeasible";
    case NSW_ERROR_RESOURCE:
      return "resource limit";
    case NSW_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void nsw_string_free(char* text) { delete[] text; }

const char* nsw_version(void) { return "0.1.0"; }

}  // extern "C"
