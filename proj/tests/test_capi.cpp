#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hdx/hdx.h"

using Json = nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { hdx_string_free(s); }
  Json json() const { return Json::parse(s); }
};

struct Handle {
  hdx_complex* x = nullptr;
  ~Handle() { hdx_complex_free(x); }
};

int build(const Json& spec, Handle& h, const hdx_complex* base = nullptr) {
  return hdx_complex_build(spec.dump().c_str(), base, &h.x);
}

}  // namespace

TEST_CASE("build and serialize") {
  Handle q;
  REQUIRE(build({{"shape", "hypercube"}, {"d", 3}}, q) == HDX_OK);
  size_t f[8];
  size_t len = 0;
  CHECK(hdx_complex_f_vector(q.x, f, 8, &len) == HDX_OK);
  CHECK(len == 4);
  CHECK(f[0] == 8);
  CHECK(f[1] == 12);
  CHECK(f[2] == 6);
  CHECK(f[3] == 1);
  Str text;
  REQUIRE(hdx_complex_to_json(q.x, &text.s) == HDX_OK);
  Handle back;
  REQUIRE(hdx_complex_from_json(text.s, &back.x) == HDX_OK);
  CHECK(hdx_complex_hash(back.x) == hdx_complex_hash(q.x));

  Handle y;
  REQUIRE(build({{"shape", "ynp"}, {"n", 10}, {"p", 0.0}, {"seed", 1}}, y) == HDX_OK);
  CHECK(hdx_complex_f_vector(y.x, f, 8, &len) == HDX_OK);
  CHECK((len < 3 || f[2] == 0));
}

TEST_CASE("dual twice is the identity") {
  Handle x, d1, d2;
  REQUIRE(build({{"shape", "random"}, {"n", 5}, {"p", 0.3}, {"max_size", 4}, {"seed", 3}}, x) == HDX_OK);
  REQUIRE(build({{"shape", "dual"}, {"n", 5}}, d1, x.x) == HDX_OK);
  REQUIRE(build({{"shape", "dual"}, {"n", 5}}, d2, d1.x) == HDX_OK);
  Str a, b;
  hdx_complex_to_json(x.x, &a.s);
  hdx_complex_to_json(d2.x, &b.s);
  CHECK(std::string(a.s) == std::string(b.s));
}

TEST_CASE("invalid builds report status 2") {
  Handle h;
  CHECK(build({{"shape", "klein"}}, h) == HDX_INVALID_ARGUMENT);
  CHECK(h.x == nullptr);
  CHECK(std::string(hdx_last_error()).find("klein") != std::string::npos);
  CHECK(build({{"shape", "dual"}, {"n", 4}}, h) == HDX_INVALID_ARGUMENT);
  CHECK(hdx_complex_build("{not json", nullptr, &h.x) == HDX_INVALID_ARGUMENT);
  CHECK(hdx_complex_from_json("[]", &h.x) == HDX_INVALID_ARGUMENT);
}

TEST_CASE("compute records") {
  Handle q;
  REQUIRE(build({{"shape", "hypercube"}, {"d", 3}}, q) == HDX_OK);
  Str r;
  REQUIRE(hdx_compute(q.x, R"({"command":"cheeger","k":1,"mode":"co"})", &r.s) == HDX_OK);
  const Json j = r.json();
  CHECK(j["result"]["value"] == Json{{"num", 1}, {"den", 1}});

  Handle a;
  REQUIRE(build({{"shape", "coxeter-a"}, {"n", 4}}, a) == HDX_OK);
  Str d;
  REQUIRE(hdx_compute(a.x, R"({"command":"cheeger-top-diam"})", &d.s) == HDX_OK);
  CHECK(d.json()["result"]["value"] == Json{{"num", 1}, {"den", 3}});
}

TEST_CASE("compute is deterministic across threads") {
  Handle a;
  REQUIRE(build({{"shape", "coxeter-a"}, {"n", 4}}, a) == HDX_OK);
  Str one, four;
  REQUIRE(hdx_compute(a.x, R"({"command":"cheeger","k":1,"threads":1})", &one.s) == HDX_OK);
  REQUIRE(hdx_compute(a.x, R"({"command":"cheeger","k":1,"threads":4})", &four.s) == HDX_OK);
  CHECK(std::string(one.s) == std::string(four.s));
}

TEST_CASE("cosystole through the api") {
  Handle q;
  REQUIRE(build({{"shape", "hypercube"}, {"d", 3}}, q) == HDX_OK);
  Str text;
  hdx_complex_to_json(q.x, &text.s);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", hdx_complex_hash(q.x));
  const Json req = {{"command", "cosystole"}, {"cochain", {{"complex_hash", hash}, {"dim", 1}, {"bits_hex", "ff0"}}}};
  Str r1, r2;
  REQUIRE(hdx_compute(q.x, req.dump().c_str(), &r1.s) == HDX_OK);
  REQUIRE(hdx_compute(q.x, req.dump().c_str(), &r2.s) == HDX_OK);
  CHECK(std::string(r1.s) == std::string(r2.s));
  CHECK(r1.json()["result"]["weight"] == 8);
  CHECK(r1.json()["result"]["norm"].get<int>() <= 4);

  Json bad = req;
  bad["cochain"]["complex_hash"] = "0000000000000000";
  Str r3;
  CHECK(hdx_compute(q.x, bad.dump().c_str(), &r3.s) == HDX_INVALID_ARGUMENT);
}

TEST_CASE("error statuses carry records") {
  Handle s;
  REQUIRE(build({{"shape", "simplex"}, {"n", 8}, {"k", 3}}, s) == HDX_OK);
  Str r;
  CHECK(hdx_compute(s.x, R"({"command":"cheeger","k":2,"budget":16})", &r.s) == HDX_BUDGET_EXCEEDED);
  const Json j = r.json();
  CHECK(j["error"] == "BudgetExceeded");
  CHECK(j["budget"] == 16);
  CHECK(j["required"].get<double>() > 16);
  CHECK(j["partial"]["quotient_dim"].get<int>() > 4);

  Handle disk;
  REQUIRE(build({{"shape", "simplex"}, {"n", 3}}, disk) == HDX_OK);
  Str h;
  CHECK(hdx_compute(disk.x, R"({"command":"cheeger-top-diam"})", &h.s) == HDX_HYPOTHESIS_FAILED);
  CHECK(h.json()["error"] == "HypothesisFailed");

  Str u;
  CHECK(hdx_compute(nullptr, R"({"command":"frobnicate"})", &u.s) == HDX_INVALID_ARGUMENT);
  Str m;
  CHECK(hdx_compute(nullptr, R"({"command":"cheeger","k":1})", &m.s) == HDX_INVALID_ARGUMENT);
}

TEST_CASE("experiments without a complex") {
  Str p;
  REQUIRE(hdx_compute(nullptr, R"({"command":"paley","ps":[5,7],"k":1})", &p.s) == HDX_OK);
  const Json j = p.json();
  CHECK(j["table"]["rows"].size() == 2);
  CHECK(j["result"][0]["exact_csy"] == 2);
  Str q;
  REQUIRE(hdx_compute(nullptr, R"({"command":"quotient-experiment","n":6,"p":0.0,"trials":4})", &q.s) == HDX_OK);
  CHECK(q.json()["result"]["fraction_nontrivial"] == 1.0);
}

TEST_CASE("verify") {
  Str r;
  CHECK(hdx_verify("product", nullptr, &r.s) == HDX_OK);
  CHECK(r.json()["passed"] == true);
  Str u;
  CHECK(hdx_verify("empty-suite", nullptr, &u.s) == HDX_INVALID_ARGUMENT);
  CHECK(std::string(hdx_version()).size() > 0);
}
