#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ccring/cli.hpp"

namespace {

void attach_common(CLI::App* sub, ccring::cli::JobConfig& cfg, bool& json_out) {
  sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
  sub->add_option("--m", cfg.m, "field extension degree (default 1)");
  sub->add_option("--modulus", cfg.modulus,
                  "monic irreducible over F_p as 'c0,c1,...' (default: smallest)");
  sub->add_option("--threshold", cfg.threshold,
                  "enumeration budget in codewords (default 2^24, or CCRING_THRESHOLD)");
  sub->add_flag("--json", json_out, "emit the JSON report on stdout");
}

void attach_ring(CLI::App* sub, ccring::cli::JobConfig& cfg) {
  sub->add_option("--e", cfg.e, "nilpotency index of u")->required();
  sub->add_option("--k", cfg.k, "length exponent: codes of length p^k*n")->required();
  sub->add_option("--n", cfg.n, "coprime length part")->required();
  sub->add_option("--omega", cfg.omega, "unit omega as 'b0,b1,...' (default 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constacyclic codes over F_{p^m}[u]/<u^e>: matrix-product decomposition,\n"
               "distance certification and equivalence verification"};
  app.require_subcommand(1);

  ccring::cli::JobConfig cfg;
  bool json_out = false;
  std::string exps_text;

  auto* factor = app.add_subcommand("factor", "factor x^n - 1 over F_{p^m}");
  attach_common(factor, cfg, json_out);
  factor->add_option("--n", cfg.n, "length (coprime to p)")->required();

  auto* params = app.add_subcommand("params", "derived parameters l, n', q, n''");
  attach_common(params, cfg, json_out);
  attach_ring(params, cfg);

  auto* decompose = app.add_subcommand("decompose", "torsion towers and A_{p^k}");
  attach_common(decompose, cfg, json_out);
  attach_ring(decompose, cfg);
  decompose->add_option("--exps", exps_text, "exponent vector 'i1,i2,...'")->required();

  auto* recurse = app.add_subcommand("recurse", "child codes of length p^{k-1}*n");
  attach_common(recurse, cfg, json_out);
  attach_ring(recurse, cfg);
  recurse->add_option("--exps", exps_text, "exponent vector 'i1,i2,...'")->required();

  auto* distance = app.add_subcommand("distance", "certified minimum Hamming distance");
  attach_common(distance, cfg, json_out);
  attach_ring(distance, cfg);
  distance->add_option("--exps", exps_text, "exponent vector 'i1,i2,...'")->required();

  auto* verify = app.add_subcommand("verify", "verify the matrix-product equivalence");
  attach_common(verify, cfg, json_out);
  attach_ring(verify, cfg);
  verify->add_option("--exps", exps_text, "exponent vector 'i1,i2,...'");
  verify->add_flag("--all", cfg.all, "verify every exponent vector");
  verify->add_option("--mode", cfg.mode, "full | sampled (default full)");
  verify->add_option("--samples", cfg.samples, "sampled-mode codeword count");
  verify->add_option("--seed", cfg.seed, "sampled-mode RNG seed");

  auto* report = app.add_subcommand("report", "everything about one code");
  attach_common(report, cfg, json_out);
  attach_ring(report, cfg);
  report->add_option("--exps", exps_text, "exponent vector 'i1,i2,...'")->required();
  report->add_option("--mode", cfg.mode, "full | sampled (default full)");
  report->add_option("--samples", cfg.samples, "sampled-mode codeword count");
  report->add_option("--seed", cfg.seed, "sampled-mode RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are invalid input
  }

  if (!exps_text.empty()) {
    std::vector<std::uint32_t> exps;
    std::size_t start = 0;
    try {
      while (start <= exps_text.size()) {
        const std::size_t comma = exps_text.find(',', start);
        const std::string item = exps_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        exps.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } catch (const std::exception&) {
      std::cerr << "error: bad --exps '" << exps_text << "'\n";
      return 2;
    }
    cfg.exps = std::move(exps);
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  const ccring::cli::RunResult res = ccring::cli::run(sub, cfg);
  if (json_out)
    std::cout << res.report.dump(2) << "\n";
  else
    std::cout << res.text;
  return res.exit_code;
}
