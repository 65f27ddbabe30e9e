#include <doctest.h>

#include <cstdlib>

#include "ccring/cli.hpp"
#include "ccring/common.hpp"

using namespace ccring;
using ccring::cli::JobConfig;
using ccring::cli::run;

namespace {

JobConfig worked_cfg() {
  JobConfig cfg;
  cfg.p = 3;
  cfg.m = 1;
  cfg.e = 2;
  cfg.k = 2;
  cfg.n = 10;
  cfg.omega = "1,0";
  return cfg;
}

}  // namespace

TEST_CASE("params subcommand reports the derived values") {
  const auto res = run("params", worked_cfg());
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["params"]["l"] == 1);
  CHECK(res.report["params"]["n_prime"] == 19);
  CHECK(res.report["params"]["q"] == 2);
  CHECK(res.report["params"]["n_dprime"] == 1);
  CHECK(res.report["params"]["N"] == 90);
}

TEST_CASE("factor subcommand lists canonical factors") {
  JobConfig cfg;
  cfg.p = 3;
  cfg.n = 10;
  const auto res = run("factor", cfg);
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.report["factors"].size() == 4);
  CHECK(res.report["factors"][0]["coeffs"] == "1,1");
  CHECK(res.report["factors"][3]["coeffs"] == "1,2,1,2,1");
  CHECK(res.report["factors"][2]["index"] == 3);
}

TEST_CASE("distance subcommand certifies d = 5 for the worked code") {
  JobConfig cfg = worked_cfg();
  cfg.exps = std::vector<std::uint32_t>{7, 2, 18, 15};
  const auto res = run("distance", cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["distances"]["d"] == 5);
  CHECK(res.report["distances"]["delta"] ==
        nlohmann::json::array({9, 6, 3, 3, 3, 2, 2, 2, 1}));
  CHECK(res.report["distances"]["d_i"] == nlohmann::json::array({2, 2, 2, 5, 5, 5, 5, 5, 5}));
}

TEST_CASE("decompose and report carry the schema fields") {
  JobConfig cfg = worked_cfg();
  cfg.exps = std::vector<std::uint32_t>{7, 2, 18, 15};
  const auto res = run("decompose", cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["log_size"] == 39);
  CHECK(res.report["code_count"] == 130321);
  CHECK(res.report["towers"].size() == 9);
  CHECK(res.report["towers"][0] == nlohmann::json::array({"1,0,1,0,1,0,1,0,1", "1,1,1,1,1"}));
  CHECK(res.report["a_matrix"].size() == 9);
  const auto rep = run("report", cfg);
  REQUIRE(rep.exit_code == 0);
  CHECK(rep.report["verification"]["passed"] == true);
  CHECK(rep.report["distances"]["d"] == 5);
}

TEST_CASE("verify subcommand exit codes") {
  SUBCASE("exhaustive small instance verifies") {
    JobConfig cfg;
    cfg.p = 2;
    cfg.e = 2;
    cfg.k = 1;
    cfg.n = 3;
    cfg.omega = "1,0";
    cfg.all = true;
    const auto res = run("verify", cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report["verification"]["passed"] == true);
    CHECK(res.report["verification"]["total"] == 25);
  }
  SUBCASE("missing exps is invalid input") {
    const auto res = run("verify", worked_cfg());
    CHECK(res.exit_code == 2);
  }
  SUBCASE("non-prime p is invalid input") {
    JobConfig cfg = worked_cfg();
    cfg.p = 6;
    CHECK(run("params", cfg).exit_code == 2);
  }
  SUBCASE("unknown subcommand is invalid input") {
    CHECK(run("nope", worked_cfg()).exit_code == 2);
  }
}

TEST_CASE("identical config and seed give byte-identical JSON") {
  JobConfig cfg;
  cfg.p = 2;
  cfg.e = 2;
  cfg.k = 1;
  cfg.n = 3;
  cfg.omega = "1,0";
  cfg.exps = std::vector<std::uint32_t>{2, 1};
  cfg.mode = "sampled";
  cfg.samples = 8;
  cfg.seed = 1234;
  const auto a = run("report", cfg);
  const auto b = run("report", cfg);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.exit_code == 0);
}

TEST_CASE("threshold resolution order") {
  JobConfig cfg;
  cfg.threshold = 42;
  CHECK(cli::resolve_threshold(cfg) == 42);
  cfg.threshold = 0;
  ::setenv("CCRING_THRESHOLD", "1000", 1);
  CHECK(cli::resolve_threshold(cfg) == 1000);
  ::unsetenv("CCRING_THRESHOLD");
  CHECK(cli::resolve_threshold(cfg) == kDefaultEnumThreshold);
}

TEST_CASE("threshold violations surface as invalid input") {
  JobConfig cfg = worked_cfg();
  cfg.exps = std::vector<std::uint32_t>{7, 2, 18, 15};
  cfg.threshold = 10;  // far below any constituent enumeration
  const auto res = run("distance", cfg);
  CHECK(res.exit_code == 2);
  CHECK(res.report.contains("error"));
}
