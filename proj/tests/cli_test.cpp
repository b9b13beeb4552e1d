#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "hbk/invariants.hpp"
#include "knotspec.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HBK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("invariants json round-trips the computed values exactly") {
  RunResult r = run_cli("invariants L:1,1,0 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);

  hbk::HandlebodyKnot hk = hbk::cli::parse_knot("L:1,1,0");
  auto slopes = std::get<hbk::TypeKSlopes>(hbk::characteristic_slopes(hk));
  CHECK(doc["side"] == "L");
  CHECK(doc["l_irrelevant"] == true);
  CHECK(doc["jsj_type"] == "K");
  CHECK(doc["lambda"] == 3);
  CHECK(doc["phi"] == -1);
  CHECK(doc["slopes"]["r_c"]["num"] == hbk::to_int64(slopes.r_c.num()));
  CHECK(doc["slopes"]["r_c"]["den"] == hbk::to_int64(slopes.r_c.den()));
  CHECK(doc["slopes"]["r1"]["num"] == 3);
  CHECK(doc["slopes"]["r2"]["den"] == 1);
  CHECK(doc["params"]["m"] == 1);

  RunResult m = run_cli("invariants R:3,2,1,0 --format json");
  json mdoc = json::parse(m.output);
  CHECK(mdoc["jsj_type"] == "M");
  CHECK(mdoc["slopes"]["r_a"]["num"] == 29);
  CHECK(mdoc["slopes"]["r_a"]["den"] == 3);
  CHECK(mdoc["slopes"]["r_b"]["num"] == 13);
  CHECK(mdoc["slopes"]["r_b"]["den"] == 5);
  CHECK_FALSE(mdoc.contains("l_irrelevant"));
}

TEST_CASE("constraint failures exit 2 and name the clause") {
  RunResult r = run_cli("invariants R:2,1,1,0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("(l,m)≠(±2,±1)") != std::string::npos);

  r = run_cli("invariants R:3,1,0,0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("(m,n)≠(1,0),(-1,1)") != std::string::npos);

  r = run_cli("invariants not-a-knot");
  CHECK(r.exit_code == 2);
  r = run_cli("bogus-subcommand");
  CHECK(r.exit_code == 2);
  r = run_cli("equiv L:1,1,0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("invariants --help").exit_code == 0);
}

TEST_CASE("equiv, exterior, census and family commands") {
  RunResult r = run_cli("equiv L:1,1,0 L:2,0,1 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["equivalent"] == true);
  CHECK(doc["reason"] == "slope-match");
  CHECK(doc["witness"].is_array());

  r = run_cli("exterior L:-1,0,0 L:-1,0,5 --format json");
  CHECK(json::parse(r.output)["exteriors_homeomorphic"] == true);
  r = run_cli("exterior R:3,2,1,0 L:1,1,0");
  CHECK(r.exit_code == 2);

  r = run_cli("census L:1,1,0 --format json");
  doc = json::parse(r.output);
  CHECK(doc["type32_indices"] == json::array({-1, 0, 1, 2}));
  CHECK(doc["noncharacteristic_non41_count"] == 5);
  CHECK(doc["has_type33"] == true);
  CHECK(doc["characteristic_count"] == 1);

  r = run_cli("family --format json -- -1 0 3");
  doc = json::parse(r.output);
  REQUIRE(r.exit_code == 0);
  CHECK(doc["members"].size() == 4);
  CHECK(doc["members"][0]["r_c"]["num"] == -4);
  CHECK(doc["pairwise_inequivalent"] == true);
  CHECK(doc["pairwise_exteriors_homeomorphic"] == true);
  CHECK(run_cli("family 1 0 3").exit_code == 2);
}

TEST_CASE("verify command bounds and exit codes") {
  RunResult r = run_cli("verify --suite lemmas --bound 3 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["passed"] == true);
  CHECK(doc["suites"][0]["suite"] == "lemmas");
  CHECK(doc["suites"][0]["box_bound"] == 3);

  // HBK_BOUND overrides the default, the flag overrides the env
  r = run_cli("verify --suite lemmas --format json");
  CHECK(json::parse(r.output)["suites"][0]["box_bound"] == 8);
  {
    std::string cmd = std::string("HBK_BOUND=4 ") + HBK_CLI_PATH +
                      " verify --suite lemmas --format json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
      output.append(buffer.data(), n);
    pclose(pipe);
    CHECK(json::parse(output)["suites"][0]["box_bound"] == 4);
  }

  CHECK(run_cli("verify --bound 2").exit_code == 2);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}
