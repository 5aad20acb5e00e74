#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef QALG_CLI_PATH
#error "QALG_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs the CLI with the given arguments, capturing one stream.
RunResult run(const std::string& args, bool capture_stderr = false) {
  const std::string redirect =
      capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
  const std::string cmd = std::string(QALG_CLI_PATH) + " " + args + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

nlohmann::json run_json(const std::string& args) {
  const RunResult r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("sigma prints the trace element") {
  const nlohmann::json j = run_json("sigma --n 2 --i 1");
  const nlohmann::json expected = nlohmann::json::parse(R"({
    "n": 2, "det_power": 0,
    "terms": [
      {"coeff": [[0, "1"]], "word": [[1, 1]]},
      {"coeff": [[0, "1"]], "word": [[2, 2]]}
    ]})");
  CHECK(j == expected);
}

TEST_CASE("det prints the two-term expansion") {
  const nlohmann::json j = run_json("det --n 2");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == nlohmann::json::parse(R"([[0, "1"]])"));
  CHECK(j["terms"][1]["coeff"] == nlohmann::json::parse(R"([[2, "-1"]])"));
  CHECK(j["det_power"] == 0);
}

TEST_CASE("minor on the full index set equals det") {
  const nlohmann::json m = run_json("minor --n 2 --rows 1,2 --cols 1,2");
  const nlohmann::json d = run_json("det --n 2");
  CHECK(m == d);
}

TEST_CASE("sl-eq reports quotient equality") {
  CHECK(run_json("sl-eq --n 2 --lhs \"detq\" --rhs \"1\"") ==
        nlohmann::json::parse(R"({"equal": true})"));
  CHECK(run_json("sl-eq --n 2 --lhs \"x[1,1]\" --rhs \"x[2,2]\"") ==
        nlohmann::json::parse(R"({"equal": false})"));
}

TEST_CASE("normalform canonicalizes equal expressions identically") {
  // equal elements print byte-identical JSON regardless of how they are typed
  const RunResult a = run("normalform --n 2 --expr \"(x[1,1] + x[2,2])^2\"");
  const RunResult b = run(
      "normalform --n 2 --expr "
      "\"x[1,1]^2 + x[1,1]*x[2,2] + x[2,2]*x[1,1] + x[2,2]^2\"");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);

  const RunResult c = run("normalform --n 2 --expr \"detq*x[1,2]\"");
  const RunResult d = run("normalform --n 2 --expr \"x[1,2]*detq\"");
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("pretty rendering is human-readable") {
  const RunResult r = run("det --n 2 --pretty");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("x[1,1]*x[2,2]") != std::string::npos);
  CHECK(r.out.find("x[1,2]*x[2,1]") != std::string::npos);
}

TEST_CASE("coact emits a two-leg tensor") {
  const nlohmann::json j =
      run_json("coact --n 2 --coaction alpha --group sl --expr \"x[1,2]\"");
  CHECK(j["arity"] == 2);
  CHECK(!j["terms"].empty());
}

TEST_CASE("coinv and hilbert report the invariant dimensions") {
  const nlohmann::json b =
      run_json("coinv --n 2 --coaction beta --group sl --degree 2");
  CHECK(b["degree"] == 2);
  CHECK(b["dim"] == 2);
  CHECK(b["basis"].size() == 2);

  CHECK(run_json("hilbert --n 2 --coaction alpha --group sl --max-degree 5") ==
        nlohmann::json::parse("[1, 1, 2, 2, 3, 3]"));
}

TEST_CASE("generators finds the two fundamental invariants") {
  const nlohmann::json g =
      run_json("generators --n 2 --coaction alpha --group sl --max-degree 3");
  REQUIRE(g.size() == 2);
  nlohmann::json s1 = run_json("sigma --n 2 --i 1");
  s1.erase("det_power");  // generators are plain polynomial elements
  CHECK(g[0] == s1);
}

TEST_CASE("embed splits by z-degree") {
  const nlohmann::json j = run_json("embed --n 2 --expr \"x[1,1] + detq\"");
  CHECK(j["components"].size() == 2);
  CHECK(j["components"].contains("1"));
  CHECK(j["components"].contains("2"));
}

TEST_CASE("check suites succeed and respect the seed flag") {
  const RunResult r = run("check --suite relations --n 2 --seed 7");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  // determinism: the same seed reproduces the same report
  const RunResult again = run("check --suite relations --n 2 --seed 7");
  CHECK(again.out == r.out);
}

TEST_CASE("usage errors exit with status 2 on standard error") {
  CHECK(run("frobnicate --n 2").code == 2);
  CHECK(run("coinv --n 2 --coaction alpha --group sl").code == 2);  // no degree
  const RunResult bad_index =
      run("normalform --n 2 --expr \"x[3,1]\"", /*capture_stderr=*/true);
  CHECK(bad_index.code == 2);
  CHECK(bad_index.out.find("outside") != std::string::npos);
  const RunResult bad_kind =
      run("coact --n 2 --coaction gamma --group sl --expr \"1\"",
          /*capture_stderr=*/true);
  CHECK(bad_kind.code == 2);
}
