#pragma once

// Subcommand driver shared by the ccring binary and the tests: parses a job
// description, runs the requested pipeline and renders text + JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ccring::cli {

struct JobConfig {
  std::uint64_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t e = 1;
  std::uint32_t k = 1;
  std::uint64_t n = 0;
  std::string omega = "1";  // RElem text, zero-padded to e coordinates
  std::string modulus;      // optional monic irreducible over F_p, poly text
  std::optional<std::vector<std::uint32_t>> exps;
  std::string mode = "full";  // full | sampled
  std::uint64_t samples = 32;
  std::uint64_t seed = 0;
  std::uint64_t threshold = 0;  // 0 -> CCRING_THRESHOLD env or the default
  bool all = false;             // verify every exponent vector
};

struct RunResult {
  int exit_code = 0;  // 0 ok/verified, 1 verification failed, 2 invalid input
  nlohmann::json report;
  std::string text;
};

// Subcommands: factor, params, decompose, recurse, distance, verify, report.
RunResult run(const std::string& subcommand, const JobConfig& cfg);

// Effective enumeration threshold: explicit flag, else CCRING_THRESHOLD,
// else the built-in default.
std::uint64_t resolve_threshold(const JobConfig& cfg);

}  // namespace ccring::cli
