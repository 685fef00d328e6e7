// Command-line front end. Talks to the solver library exclusively through
// the C API in nswopt.h.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nswopt.h"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

int exit_code_for(nsw_status status) {
  switch (status) {
    case NSW_OK:
      return 0;
    case NSW_ERROR_INVALID_INPUT:
    case NSW_ERROR_INFEASIBLE:
      return kExitBadInput;
    case NSW_ERROR_RESOURCE:
      return kExitResource;
    default:
      return kExitFailure;
  }
}

int report_failure(nsw_status status) {
  std::cerr << "error (" << nsw_status_name(status) << "): " << nsw_last_error() << "\n";
  return exit_code_for(status);
}

struct InstanceHandle {
  nsw_instance* ptr = nullptr;
  ~InstanceHandle() { nsw_instance_free(ptr); }
};

struct ResultHandle {
  nsw_result* ptr = nullptr;
  ~ResultHandle() { nsw_result_free(ptr); }
};

std::string result_json_text(const nsw_result* result) {
  char* text = nullptr;
  if (nsw_result_to_json(result, &text) != NSW_OK) return "{}";
  std::string out(text);
  nsw_string_free(text);
  return out;
}

int write_output(const std::string& text, const std::string& path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitFailure;
  }
  out << body;
  return 0;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

// ---- gen -------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string preset;
  int n = 2;
  int m = 4;
  int k = 2;
  std::string c = "5";
  int cap = 1;
  int cap_min = 1;
  int cap_max = 3;
  std::string kind = "mixed";
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  json params;
  if (!args.preset.empty()) {
    params["preset"] = args.preset;
    params["n"] = args.n;
    params["k"] = args.k;
    params["c"] = args.c;
    params["cap"] = args.cap;
  } else {
    params["family"] = args.family;
    params["n"] = args.n;
    params["m"] = args.m;
    params["kind"] = (args.family == "weighted" && args.kind == "mixed") ? "additive"
                                                                         : args.kind;
    params["cap_min"] = args.cap_min;
    params["cap_max"] = args.cap_max;
    params["seed"] = args.seed;
  }
  InstanceHandle inst;
  if (nsw_status s = nsw_instance_generate(params.dump().c_str(), &inst.ptr); s != NSW_OK) {
    return report_failure(s);
  }
  char* text = nullptr;
  if (nsw_status s = nsw_instance_to_json(inst.ptr, &text); s != NSW_OK) {
    return report_failure(s);
  }
  std::string doc(text);
  nsw_string_free(text);
  return write_output(doc, args.out);
}

// ---- solve / exact / verify -------------------------------------------

struct SolveArgs {
  std::string file;
  std::string alg = "one-sided";
  double eps = 0.1;
  std::uint64_t seed = 0;
  int trials = 100;
  long long budget = -1;
  std::string out;
};

json solve_options(const SolveArgs& args) {
  json opts{{"alg", args.alg}, {"eps", args.eps}, {"seed", args.seed}, {"trials", args.trials}};
  if (args.budget > 0) opts["budget"] = args.budget;
  return opts;
}

int run_solve(const SolveArgs& args) {
  InstanceHandle inst;
  if (nsw_status s = nsw_instance_from_file(args.file.c_str(), &inst.ptr); s != NSW_OK) {
    return report_failure(s);
  }
  ResultHandle result;
  if (nsw_status s = nsw_solve(inst.ptr, solve_options(args).dump().c_str(), &result.ptr);
      s != NSW_OK) {
    return report_failure(s);
  }
  std::string text = result_json_text(result.ptr);
  int rc = write_output(text, args.out);
  if (rc != 0) return rc;
  // A capped column generation still returns its partial solve, but the run
  // counts as a resource failure.
  json doc = json::parse(text, nullptr, false);
  if (!doc.is_discarded() &&
      doc.value("diagnostics", json::object()).value("lp_status", "") == "column_cap") {
    std::cerr << "warning: column budget exhausted; result is the partial solve\n";
    return kExitResource;
  }
  return 0;
}

int run_exact(const SolveArgs& args) {
  InstanceHandle inst;
  if (nsw_status s = nsw_instance_from_file(args.file.c_str(), &inst.ptr); s != NSW_OK) {
    return report_failure(s);
  }
  json opts = json::object();
  if (args.budget > 0) opts["budget"] = args.budget;
  ResultHandle result;
  if (nsw_status s = nsw_exact(inst.ptr, opts.dump().c_str(), &result.ptr); s != NSW_OK) {
    return report_failure(s);
  }
  return write_output(result_json_text(result.ptr), args.out);
}

int run_verify(const SolveArgs& args) {
  InstanceHandle inst;
  if (nsw_status s = nsw_instance_from_file(args.file.c_str(), &inst.ptr); s != NSW_OK) {
    return report_failure(s);
  }
  ResultHandle result;
  if (nsw_status s = nsw_verify(inst.ptr, solve_options(args).dump().c_str(), &result.ptr);
      s != NSW_OK) {
    return report_failure(s);
  }
  std::string text = result_json_text(result.ptr);
  int rc = write_output(text, args.out);
  if (rc != 0) return rc;
  json doc = json::parse(text, nullptr, false);
  return !doc.is_discarded() && doc.value("all_pass", false) ? 0 : kExitFailure;
}

// ---- bench -------------------------------------------------------------

struct BenchArgs {
  std::string config_file;
  std::string out;
};

std::vector<int> int_list(const json& node) {
  std::vector<int> out;
  if (node.is_array()) {
    for (const auto& v : node) out.push_back(v.get<int>());
  } else {
    out.push_back(node.get<int>());
  }
  return out;
}

int run_bench(const BenchArgs& args) {
  std::ifstream in(args.config_file);
  if (!in) {
    std::cerr << "error: cannot open '" << args.config_file << "'\n";
    return kExitBadInput;
  }
  json config = json::parse(in, nullptr, false);
  if (config.is_discarded()) {
    std::cerr << "error: invalid bench config JSON\n";
    return kExitBadInput;
  }

  std::string family = config.value("family", "one-sided");
  std::string alg = config.value("alg", family == "one-sided" ? "one-sided" : "two-sided");
  std::string kind = config.value("kind", "mixed");
  double eps = config.value("eps", 0.1);
  int trials = config.value("trials", 100);
  bool oracle = config.value("oracle", true);
  long long budget = config.value("budget", -1LL);
  std::vector<int> ns = int_list(config.contains("n") ? config["n"] : json(2));
  std::vector<int> ms = int_list(config.contains("m") ? config["m"] : json(4));
  std::vector<int> seeds = int_list(config.contains("seeds") ? config["seeds"] : json(0));
  std::string out_path = args.out.empty() ? config.value("out", "") : args.out;

  std::ostringstream csv;
  csv << "family,n,m,eps,seed,alg_nsw,opt_nsw,ratio,bound,queries,millis\n";
  for (int n : ns) {
    for (int m : ms) {
      for (int seed : seeds) {
        csv << family << "," << n << "," << m << "," << format_double(eps) << "," << seed
            << ",";
        json params{{"family", family}, {"n", n},        {"m", m},
                    {"kind", kind},     {"seed", seed},  {"cap_min", config.value("cap_min", 1)},
                    {"cap_max", config.value("cap_max", 3)}};
        InstanceHandle inst;
        if (nsw_instance_generate(params.dump().c_str(), &inst.ptr) != NSW_OK) {
          std::cerr << "bench: generation failed for n=" << n << " m=" << m
                    << " seed=" << seed << ": " << nsw_last_error() << "\n";
          csv << ",,,,,\n";
          continue;
        }
        json opts{{"alg", alg}, {"eps", eps}, {"seed", seed}, {"trials", trials}};
        auto start = std::chrono::steady_clock::now();
        ResultHandle result;
        if (nsw_solve(inst.ptr, opts.dump().c_str(), &result.ptr) != NSW_OK) {
          std::cerr << "bench: solve failed for n=" << n << " m=" << m << " seed=" << seed
                    << ": " << nsw_last_error() << "\n";
          csv << ",,,,,\n";
          continue;
        }
        double millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        json doc = json::parse(result_json_text(result.ptr));
        double alg_nsw = doc.value("nsw", 0.0);
        json diag = doc.value("diagnostics", json::object());
        double bound = diag.value("bound", 0.0);
        if (alg == "one-sided") bound = 6.0 * (1.0 + eps);
        std::uint64_t queries = diag.value("queries", std::uint64_t{0});

        std::string opt_text;
        std::string ratio_text;
        json exact_opts = json::object();
        if (budget > 0) exact_opts["budget"] = budget;
        if (oracle) {
          ResultHandle exact;
          if (nsw_exact(inst.ptr, exact_opts.dump().c_str(), &exact.ptr) == NSW_OK) {
            double opt_nsw = nsw_result_objective(exact.ptr);
            opt_text = format_double(opt_nsw);
            if (alg_nsw > 0) {
              ratio_text = format_double(opt_nsw / alg_nsw);
            } else if (opt_nsw == 0.0) {
              ratio_text = "1";
            }
          } else {
            std::cerr << "bench: oracle skipped for n=" << n << " m=" << m
                      << " seed=" << seed << ": " << nsw_last_error() << "\n";
          }
        }
        csv << format_double(alg_nsw) << "," << opt_text << "," << ratio_text << ","
            << format_double(bound) << "," << queries << "," << format_double(millis)
            << "\n";
      }
    }
  }
  return write_output(csv.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash social welfare solvers under capacity constraints"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.family, "one-sided | two-sided | weighted");
  gen_cmd->add_option("--preset", gen.preset, "footnote | example1");
  gen_cmd->add_option("-n,--agents", gen.n, "agents / firms");
  gen_cmd->add_option("-m,--items", gen.m, "items / workers");
  gen_cmd->add_option("-k", gen.k, "items per agent (footnote preset)");
  gen_cmd->add_option("--c", gen.c, "common value (footnote preset), p/q");
  gen_cmd->add_option("--cap", gen.cap, "capacity (footnote preset)");
  gen_cmd->add_option("--cap-min", gen.cap_min, "minimum random capacity");
  gen_cmd->add_option("--cap-max", gen.cap_max, "maximum random capacity");
  gen_cmd->add_option("--kind", gen.kind, "additive | capped | coverage | mixed");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run an approximation algorithm");
  solve_cmd->add_option("file", solve.file, "instance JSON file")->required();
  solve_cmd->add_option("--alg", solve.alg,
                        "one-sided | two-sided | ptas | weighted | combined");
  solve_cmd->add_option("--eps", solve.eps, "accuracy parameter");
  solve_cmd->add_option("--seed", solve.seed, "rounding seed");
  solve_cmd->add_option("--trials", solve.trials, "rounding trials");
  solve_cmd->add_option("--out", solve.out, "output path (default stdout)");

  SolveArgs exact;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Brute-force optimum");
  exact_cmd->add_option("file", exact.file, "instance JSON file")->required();
  exact_cmd->add_option("--budget", exact.budget, "enumeration state budget");
  exact_cmd->add_option("--out", exact.out, "output path (default stdout)");

  SolveArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Solve and re-check optimality");
  verify_cmd->add_option("file", verify.file, "instance JSON file")->required();
  verify_cmd->add_option("--alg", verify.alg, "algorithm to verify");
  verify_cmd->add_option("--eps", verify.eps, "accuracy parameter");
  verify_cmd->add_option("--seed", verify.seed, "rounding seed");
  verify_cmd->add_option("--trials", verify.trials, "rounding trials");
  verify_cmd->add_option("--out", verify.out, "output path (default stdout)");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Sweep a size grid, emit CSV");
  bench_cmd->add_option("config", bench.config_file, "bench config JSON")->required();
  bench_cmd->add_option("--out", bench.out, "CSV path (overrides config)");

  CLI11_PARSE(app, argc, argv);

  if (gen_cmd->parsed()) return run_gen(gen);
  if (solve_cmd->parsed()) return run_solve(solve);
  if (exact_cmd->parsed()) return run_exact(exact);
  if (verify_cmd->parsed()) return run_verify(verify);
  if (bench_cmd->parsed()) return run_bench(bench);
  return kExitFailure;
}
