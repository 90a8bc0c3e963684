#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gct/cli.hpp"
#include "gct/report.hpp"

using gct::Json;
using gct::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("isotropy of det") {
  const auto r = call({"isotropy", "--target", "det", "--m", "3"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["kernel_dim"] == 16);
  CHECK(j["orbit_dim"] == 65);
  CHECK(j["schema"] == "gct-isotropy/1");
}

TEST_CASE("isotropy of perm and of the padded permanent") {
  CHECK(call({"isotropy", "--target", "perm", "--m", "3"}).json()["kernel_dim"] == 4);
  const Json p = call({"isotropy", "--target", "padded", "--m", "4", "--n", "3"}).json();
  CHECK(p["kernel_dim"] == 101);
  CHECK(p["profile"]["k_LR"] == 5);
  CHECK(p["profile"]["all_hold"] == true);
  const Json l = call({"isotropy", "--target", "padded", "--m", "4", "--n", "3", "--subalgebra", "levi-L2P"}).json();
  CHECK(l["kernel_dim"] == 5);
  CHECK(l["dimension"] == 100);
}

TEST_CASE("precondition failures exit 2 with a machine-readable error") {
  const auto r = call({"certify", "--m", "5", "--n", "3"});
  CHECK(r.code == 2);
  const Json j = r.json();
  CHECK(j["error"] == "precondition");
  CHECK(j["message"].get<std::string>().find("requires m >= 2n") != std::string::npos);

  CHECK(call({"isotropy", "--target", "det", "--m", "0"}).code == 2);
  CHECK(call({"isotropy", "--target", "hafnian", "--m", "3"}).code == 2);
  CHECK(call({"isotropy", "--target", "padded", "--m", "4", "--n", "3", "--subalgebra", "borel"}).code == 2);
  CHECK(call({"rigidity", "--n", "1"}).code == 2);
  CHECK(call({"branch", "--weight", "1,2"}).code == 2);
  CHECK(call({"branch", "--weight", "a,b"}).code == 2);
  CHECK(call({"multiplicities", "--m", "6", "--n", "3", "--d", "3"}).code == 2);
  CHECK(call({"decompose", "--input", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("usage errors exit 64") {
  CHECK(call({"quadrics", "--bogus"}).code == 64);
  CHECK(call({"--bogus", "quadrics"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"certify", "--m", "6"}).code == 64);
  CHECK(call({"--output", "xml", "quadrics"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("budget exhaustion is inconclusive") {
  const auto r = call({"certify", "--m", "8", "--n", "4"});
  CHECK(r.code == 3);
  CHECK(r.json()["verdict"] == "inconclusive: budget");
  CHECK(call({"--budget", "100", "certify", "--m", "6", "--n", "3"}).code == 3);

  setenv("GCT_SIZE_BUDGET", "50", 1);
  CHECK(call({"certify", "--m", "6", "--n", "3"}).code == 3);
  setenv("GCT_SIZE_BUDGET", "zero", 1);
  CHECK(call({"quadrics"}).code == 2);
  unsetenv("GCT_SIZE_BUDGET");
}

TEST_CASE("prime configuration is validated") {
  CHECK(call({"--primes", "4611686018427387847,4611686018427387847", "quadrics"}).code == 2);
  CHECK(call({"--primes", "4611686018427387849,4611686018427387847", "quadrics"}).code == 2);
  CHECK(call({"--primes", "5", "quadrics"}).code == 2);
  CHECK(call({"--primes", "1000003,1000033", "quadrics"}).code == 0);
  setenv("GCT_PRIMES", "1000003,1000003", 1);
  CHECK(call({"quadrics"}).code == 2);
  unsetenv("GCT_PRIMES");
}

TEST_CASE("quadrics, rigidity, branch and orbit-dim") {
  const Json q = call({"quadrics"}).json();
  std::vector<int> kernels;
  for (const auto& row : q["rows"]) kernels.push_back(row["kernel_dim"]);
  CHECK(kernels == std::vector<int>{6, 7, 9, 12, 16});

  const Json r = call({"rigidity", "--n", "3"}).json();
  CHECK(r["kernel_dim"] == 0);
  CHECK(r["zero_control_kernel_dim"] == 9);

  const Json b = call({"branch", "--weight", "2,1,0"}).json();
  CHECK(b["branches"].size() == 4);
  CHECK(b["sum_rule_holds"] == true);

  const Json y = call({"orbit-dim", "--m", "4", "--n", "3"}).json();
  CHECK(y["dim_Y"] == 155);
  CHECK(y["lie_orbit_dim"] == 155);
}

TEST_CASE("multiplicities with the Pieri check") {
  const auto r = call({"multiplicities", "--m", "6", "--n", "3", "--d", "1", "--pieri-check"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["mtable"]["count"] == 4);
  CHECK(j["mtable"]["entries"].contains("6,0,0,0,0,0,0,0,0,0"));
  CHECK(j["pieri"]["holds"] == true);
  CHECK(j["pieri"]["lhs_dim"] == 48400);
  CHECK(j["lift"]["weights"].size() == 4);
  CHECK(j["lift"]["weights"][0]["weight"].size() == 36);
}

TEST_CASE("decompose a character file") {
  const std::string path = "gct_cli_test_character.json";
  {
    std::ofstream f(path);
    f << R"({"rank":2,"entries":[{"weight":[4,0],"mult":1},{"weight":[3,1],"mult":1},{"weight":[2,2],"mult":2},)"
      << R"({"weight":[1,3],"mult":1},{"weight":[0,4],"mult":1}]})";
  }
  const auto r = call({"decompose", "--input", path});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["span_dim"] == 6);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["weight"] == Json::array({4, 0}));
  CHECK(j["entries"][1]["weight"] == Json::array({2, 2}));

  {
    std::ofstream f(path);
    f << R"({"rank":2,"entries":[{"weight":[1,0],"mult":1}]})";
  }
  const auto bad = call({"decompose", "--input", path});
  std::remove(path.c_str());
  CHECK(bad.code == 1);
  CHECK(bad.json()["error"] == "internal");
}

TEST_CASE("reports are reproducible and timing is opt-in") {
  const std::vector<std::string> args{"--seed", "42", "multiplicities", "--m", "6", "--n", "2", "--d", "2"};
  const auto a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.json().contains("runtime_ms"));
  CHECK(a.json()["seed"] == 42);
  CHECK(call({"--timing", "quadrics"}).json().contains("runtime_ms"));
}

TEST_CASE("thread count does not change the report") {
  const auto one = call({"--threads", "1", "multiplicities", "--m", "7", "--n", "2", "--d", "2"});
  const auto four = call({"--threads", "4", "multiplicities", "--m", "7", "--n", "2", "--d", "2"});
  CHECK(one.out == four.out);
}

TEST_CASE("table output") {
  const auto r = call({"--output", "table", "isotropy", "--target", "det", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kernel_dim: 6") != std::string::npos);
  CHECK(r.out.find("orbit_dim: 10") != std::string::npos);
}
