#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "nswopt.h"

using nlohmann::json;

namespace {

std::string take_string(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  nsw_string_free(text);
  return out;
}

struct Handle {
  nsw_instance* inst = nullptr;
  ~Handle() { nsw_instance_free(inst); }
};

struct Result {
  nsw_result* res = nullptr;
  ~Result() { nsw_result_free(res); }
};

constexpr const char* kTiny = R"({
  "model": "two-sided", "n": 1, "m": 2, "capacities": [2],
  "valuations": [{"kind": "additive", "values": [3, 1]}],
  "worker_values": [[1], [1]]
})";

}  // namespace

TEST_CASE("instance lifecycle through the C API") {
  Handle h;
  REQUIRE(nsw_instance_from_json(kTiny, &h.inst) == NSW_OK);
  std::string text = take_string([&] {
    char* out = nullptr;
    REQUIRE(nsw_instance_to_json(h.inst, &out) == NSW_OK);
    return out;
  }());
  json doc = json::parse(text);
  CHECK(doc["model"] == "two-sided");
  CHECK(doc["m"] == 2);

  // Round trip through the serialized form.
  Handle again;
  REQUIRE(nsw_instance_from_json(text.c_str(), &again.inst) == NSW_OK);
}

TEST_CASE("solve and exact through the C API") {
  Handle h;
  REQUIRE(nsw_instance_from_json(kTiny, &h.inst) == NSW_OK);

  Result solve;
  REQUIRE(nsw_solve(h.inst, R"({"alg":"two-sided"})", &solve.res) == NSW_OK);
  CHECK(nsw_result_objective(solve.res) == doctest::Approx(std::pow(4.0, 1.0 / 3.0)));
  json doc = json::parse(take_string([&] {
    char* out = nullptr;
    REQUIRE(nsw_result_to_json(solve.res, &out) == NSW_OK);
    return out;
  }()));
  CHECK(doc["diagnostics"]["certificate_ok"] == true);

  Result exact;
  REQUIRE(nsw_exact(h.inst, "", &exact.res) == NSW_OK);
  CHECK(nsw_result_objective(exact.res) ==
        doctest::Approx(nsw_result_objective(solve.res)));

  Result verify;
  REQUIRE(nsw_verify(h.inst, R"({"alg":"two-sided"})", &verify.res) == NSW_OK);
  json report = json::parse(take_string([&] {
    char* out = nullptr;
    REQUIRE(nsw_result_to_json(verify.res, &out) == NSW_OK);
    return out;
  }()));
  CHECK(report["all_pass"] == true);
}

TEST_CASE("error reporting") {
  Handle h;
  CHECK(nsw_instance_from_json("not json", &h.inst) == NSW_ERROR_INVALID_INPUT);
  CHECK(std::string(nsw_last_error()).find("JSON") != std::string::npos);

  CHECK(nsw_instance_from_file("/nonexistent/path.json", &h.inst) ==
        NSW_ERROR_INVALID_INPUT);

  REQUIRE(nsw_instance_from_json(kTiny, &h.inst) == NSW_OK);
  Result r;
  // Model mismatch: one-sided algorithm on a two-sided instance.
  CHECK(nsw_solve(h.inst, R"({"alg":"one-sided"})", &r.res) == NSW_ERROR_INVALID_INPUT);
  CHECK(nsw_solve(h.inst, R"({"alg":"bogus"})", &r.res) == NSW_ERROR_INVALID_INPUT);
  CHECK(nsw_solve(h.inst, "[1,2]", &r.res) == NSW_ERROR_INVALID_INPUT);
  CHECK(nsw_solve(nullptr, "{}", &r.res) == NSW_ERROR_INVALID_INPUT);

  // Budget exhaustion surfaces as a resource error.
  Handle big;
  REQUIRE(nsw_instance_generate(
              R"({"family":"one-sided","n":4,"m":9,"kind":"additive","seed":1})",
              &big.inst) == NSW_OK);
  CHECK(nsw_exact(big.inst, R"({"budget":100})", &r.res) == NSW_ERROR_RESOURCE);

  CHECK(std::string(nsw_status_name(NSW_ERROR_RESOURCE)) == "resource limit");
  CHECK(nsw_version() != nullptr);
}

TEST_CASE("generator through the C API is deterministic") {
  Handle a, b;
  const char* params = R"({"family":"weighted","n":2,"m":3,"seed":42})";
  REQUIRE(nsw_instance_generate(params, &a.inst) == NSW_OK);
  REQUIRE(nsw_instance_generate(params, &b.inst) == NSW_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  REQUIRE(nsw_instance_to_json(a.inst, &ta) == NSW_OK);
  REQUIRE(nsw_instance_to_json(b.inst, &tb) == NSW_OK);
  CHECK(std::string(ta) == std::string(tb));
  nsw_string_free(ta);
  nsw_string_free(tb);
}
