// JSON schema handling and the command-line driver: loader rejections, the
// emit/reload round trip, exit codes, and text/json numeric agreement.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "homcart/errors.hpp"
#include "homcart/json_io.hpp"
#include "homcart/spheres.hpp"

using namespace homcart;
using nlohmann::json;

#ifndef HOMCART_CLI_PATH
#define HOMCART_CLI_PATH "homcart"
#endif

namespace {

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

int run_cli(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(HOMCART_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("lie algebra json: loader rejects malformed tables") {
  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(R"({"dim": 3, "structure": [[1,0,2,1.0]]})")),
                  input_error);  // i >= j
  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(R"({"dim": 3})")), input_error);
  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(R"({"structure": []})")), input_error);
  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(R"({"dim": 3, "structure": [[0,1,2]]})")),
                  input_error);
  CHECK_NOTHROW(lie_algebra_from_json(
      json::parse(R"({"dim": 3, "structure": [[0,1,2,1.0]], "labels": ["a","b","c"]})")));
}

TEST_CASE("connection json round trip preserves every report quantity") {
  const ConnectionData c = normal_connection({2, 2, 1.0, 3.0});
  const ConnectionData c2 = connection_from_json(connection_to_json(c));

  CHECK(c2.kind == ConnectionKind::Cartan);
  CHECK(c2.simply_connected == c.simply_connected);
  CHECK(c2.h.dim() == c.h.dim());
  CHECK(c2.g.dim() == c.g.dim());
  CHECK((c2.alpha - c.alpha).cwiseAbs().maxCoeff() == 0.0);

  const ValidationReport r1 = validate(c), r2 = validate(c2);
  CHECK(r1.ok);
  CHECK(r2.ok);
  CHECK(std::abs(r1.c1_residual - r2.c1_residual) < 2e-9);
  CHECK(std::abs(r1.c2_residual - r2.c2_residual) < 2e-9);

  const HolonomyReport h1 = holonomy_report(c), h2 = holonomy_report(c2);
  CHECK(h1.dim == h2.dim);
  CHECK(h1.killing_signature == h2.killing_signature);
  CHECK(h1.equals_g == h2.equals_g);
}

TEST_CASE("connection json: alpha orientation is column per h-basis vector") {
  const ConnectionData c = normal_connection({1, 2, 1.0, 2.0});
  const json j = connection_to_json(c);
  REQUIRE(j["alpha"].is_array());
  CHECK(static_cast<int>(j["alpha"].size()) == c.h.dim());
  CHECK(static_cast<int>(j["alpha"][0].size()) == c.g.dim());
}

TEST_CASE("connection json loader rejections") {
  const json good = connection_to_json(normal_connection({1, 2, 1.0, 2.0}));
  {
    json j = good;
    j.erase("alpha");
    CHECK_THROWS_AS(connection_from_json(j), input_error);
  }
  {
    json j = good;
    j["kind"] = "affine";
    CHECK_THROWS_AS(connection_from_json(j), input_error);
  }
  {
    json j = good;
    j["alpha"] = json::array({json::array({1.0, 2.0})});
    CHECK_THROWS_AS(connection_from_json(j), input_error);
  }
}

TEST_CASE("cli: exit codes for valid, invalid and malformed inputs") {
  const std::string out = temp_path("out.txt");

  // valid geometry via the generator
  CHECK(run_cli("spheres --p 2 --q 2 --s 1 --sprime 1 check", out) == 0);

  // constructed (C.1) violation: redirect a k-column of alpha outside p
  ConnectionData c = normal_connection({2, 2, 1.0, 1.0});
  const GradedG g = build_g({2, 2, 1.0, 1.0});
  const int kcol = 4;  // first so(p) generator of h
  c.alpha.col(kcol).setZero();
  c.alpha(g.idx_gm1[0], kcol) = 1.0;  // lands in g_{-1}, outside p
  const std::string bad_geom = temp_path("c1_violation.json");
  save_connection(c, bad_geom);
  CHECK(run_cli("check --input " + bad_geom, out) == 1);
  const std::string text = slurp(out);
  CHECK(text.find("(C.1)") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);

  // malformed JSON
  const std::string broken = temp_path("broken.json");
  std::ofstream(broken) << "{ not json";
  CHECK(run_cli("check --input " + broken, out) == 2);

  // missing file
  CHECK(run_cli("check --input does_not_exist.json", out) == 2);

  // bad flags
  CHECK(run_cli("spheres --p 2", out) == 2);

  std::remove(out.c_str());
  std::remove(bad_geom.c_str());
  std::remove(broken.c_str());
}

TEST_CASE("cli: emitted geometry reloads to identical reports") {
  const std::string geom = temp_path("emitted.json");
  const std::string out1 = temp_path("direct.json");
  const std::string out2 = temp_path("reloaded.json");

  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 3 --emit " + geom + " holonomy --format json",
                  out1) == 0);
  REQUIRE(run_cli("holonomy --input " + geom + " --format json", out2) == 0);

  const json direct = json::parse(slurp(out1));
  const json reloaded = json::parse(slurp(out2));
  CHECK(direct["dims"] == reloaded["dims"]);
  CHECK(direct["killing_signature"] == reloaded["killing_signature"]);
  CHECK(direct["equals_g"] == reloaded["equals_g"]);

  std::remove(geom.c_str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli: text and json report the same numbers") {
  const std::string out_text = temp_path("rep.txt");
  const std::string out_json = temp_path("rep.json");
  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 1 holonomy", out_text) == 0);
  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 1 holonomy --format json", out_json) == 0);

  const json j = json::parse(slurp(out_json));
  const std::string text = slurp(out_text);
  CHECK(text.find("holonomy dimension: " + std::to_string(j["dims"]["holonomy"].get<int>())) !=
        std::string::npos);
  const auto sig = j["killing_signature"];
  const std::string sig_str = "(" + std::to_string(sig[0].get<int>()) + ", " +
                              std::to_string(sig[1].get<int>()) + ", " +
                              std::to_string(sig[2].get<int>()) + ")";
  CHECK(text.find(sig_str) != std::string::npos);

  std::remove(out_text.c_str());
  std::remove(out_json.c_str());
}

TEST_CASE("cli: unnormalized connection reports a nonzero Ricci contraction") {
  const std::string out = temp_path("unnorm.json");
  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 1 --unnormalized curvature --format json",
                  out) == 0);
  const json j = json::parse(slurp(out));
  // without the rho correction the trace part survives
  CHECK(j["residuals"]["conf2"].get<double>() > 1e-3);
  CHECK(j["residuals"]["conf1"].get<double>() < 1e-10);

  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 1 curvature --format json", out) == 0);
  CHECK(json::parse(slurp(out))["residuals"]["conf2"].get<double>() < 1e-10);
  std::remove(out.c_str());
}

TEST_CASE("cli: infaut surfaces the simple-connectivity warning") {
  const std::string out = temp_path("warn.txt");
  REQUIRE(run_cli("spheres --p 1 --q 2 --s 1 --sprime 2 infaut", out) == 0);
  CHECK(slurp(out).find("simple connectivity") != std::string::npos);
  REQUIRE(run_cli("spheres --p 2 --q 2 --s 1 --sprime 2 infaut", out) == 0);
  CHECK(slurp(out).find("simple connectivity") == std::string::npos);
  std::remove(out.c_str());
}
