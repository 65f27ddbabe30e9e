#include "ccring/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "ccring/consta.hpp"

namespace ccring::cli {

using nlohmann::json;

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_u64(item, what));
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

FieldCtx make_field(const JobConfig& cfg) {
  std::vector<std::uint64_t> mod;
  if (!cfg.modulus.empty()) mod = parse_u64_list(cfg.modulus, "modulus coefficient");
  return FieldCtx(cfg.p, cfg.m, std::move(mod));
}

ConstaParams make_params(const JobConfig& cfg, const FieldCtx& F) {
  const ChainRing R(F, cfg.e);
  return derive_params(F, cfg.e, cfg.k, cfg.n, R.parse(cfg.omega));
}

json params_json(const ConstaParams& P) {
  json j;
  j["p"] = P.p();
  j["m"] = P.m();
  j["e"] = P.e();
  j["k"] = P.k;
  j["n"] = P.n;
  j["N"] = P.N;
  j["omega"] = P.R.to_string(P.omega);
  std::string modulus_text;
  if (P.field().m() > 1) {
    FqPoly mp;
    mp.c = P.field().modulus();
    modulus_text = poly_to_string(mp);
  }
  j["modulus"] = modulus_text;
  j["l"] = P.l;
  j["n_prime"] = P.n_prime;
  j["q"] = P.q;
  j["n_dprime"] = P.n_dprime;
  return j;
}

json factors_json(const std::vector<FqPoly>& factors) {
  json arr = json::array();
  for (std::size_t t = 0; t < factors.size(); ++t) {
    json f;
    f["index"] = t + 1;
    f["degree"] = factors[t].deg();
    f["coeffs"] = poly_to_string(factors[t]);
    arr.push_back(std::move(f));
  }
  return arr;
}

// (p^k*e + 1)^r; emitted as a string when it overflows 64 bits
json code_count_json(const ConstaParams& P) {
  const unsigned __int128 base = P.pk * P.e() + 1;
  unsigned __int128 acc = 1;
  bool over = false;
  for (std::size_t t = 0; t < P.factors.size(); ++t) {
    acc *= base;
    if (acc > (unsigned __int128)(~std::uint64_t{0})) {
      over = true;
      break;
    }
  }
  if (over) return "over 2^64";
  return static_cast<std::uint64_t>(acc);
}

json towers_json(const MPDecomposition& dec) {
  json arr = json::array();
  for (const auto& T : dec.towers) {
    json tj = json::array();
    for (const auto& g : T.g) tj.push_back(poly_to_string(g));
    arr.push_back(std::move(tj));
  }
  return arr;
}

json a_matrix_json(const ProductMatrix& A) {
  json arr = json::array();
  for (std::size_t i = 0; i < A.alpha; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < A.beta; ++j) row.push_back(A.at(i, j));
    arr.push_back(std::move(row));
  }
  return arr;
}

json checks_json(const VerifyReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    arr.push_back(std::move(cj));
  }
  return arr;
}

// d_i per bracket slot; zero constituents report null
json distances_json(const ConstaParams& P, const Exponents& exps, std::uint64_t threshold,
                    std::uint64_t* d_out) {
  const MPDecomposition dec = decompose(P, exps);
  json di = json::array();
  for (const auto& T : dec.towers) {
    std::uint64_t tlog = 0;
    for (const auto& g : T.g) tlog += (T.n - static_cast<std::uint64_t>(g.deg())) * P.m();
    if (tlog == 0)
      di.push_back(nullptr);
    else
      di.push_back(cyclic_from_tower(P.R, T).min_distance(threshold));
  }
  json dj;
  dj["d_i"] = std::move(di);
  dj["delta"] = delta_profile(P.p(), P.k, P.field(), threshold);
  const std::uint64_t d = constacyclic_distance(P, exps, threshold);
  dj["d"] = d;
  if (d_out) *d_out = d;
  return dj;
}

Exponents required_exps(const JobConfig& cfg) {
  if (!cfg.exps) throw std::invalid_argument("this subcommand requires --exps");
  return *cfg.exps;
}

VerifyMode parse_mode(const std::string& mode) {
  if (mode == "full") return VerifyMode::kFull;
  if (mode == "sampled") return VerifyMode::kSampled;
  throw std::invalid_argument("mode must be 'full' or 'sampled'");
}

std::string exps_text(const Exponents& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

// every exponent vector in odometer order
bool next_exps(Exponents& e, std::uint32_t bound) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (++e[i] <= bound) return true;
    e[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t resolve_threshold(const JobConfig& cfg) {
  if (cfg.threshold != 0) return cfg.threshold;
  if (const char* env = std::getenv("CCRING_THRESHOLD")) return parse_u64(env, "CCRING_THRESHOLD");
  return kDefaultEnumThreshold;
}

RunResult run(const std::string& subcommand, const JobConfig& cfg) {
  RunResult res;
  std::ostringstream text;
  try {
    const std::uint64_t threshold = resolve_threshold(cfg);
    const FieldCtx F = make_field(cfg);

    if (subcommand == "factor") {
      const auto factors = factor_xn_minus_1(F, cfg.n);
      res.report["p"] = cfg.p;
      res.report["m"] = cfg.m;
      res.report["n"] = cfg.n;
      res.report["factors"] = factors_json(factors);
      text << "x^" << cfg.n << " - 1 over F_" << F.q() << ":\n";
      for (std::size_t t = 0; t < factors.size(); ++t)
        text << "  f" << t + 1 << " = " << poly_to_string(factors[t]) << "  (degree "
             << factors[t].deg() << ")\n";
    } else if (subcommand == "params") {
      const ConstaParams P = make_params(cfg, F);
      res.report["params"] = params_json(P);
      text << "l=" << P.l << " n'=" << P.n_prime << " q=" << P.q << " n''=" << P.n_dprime
           << " N=" << P.N << "\n";
    } else if (subcommand == "decompose") {
      const ConstaParams P = make_params(cfg, F);
      const Exponents exps = required_exps(cfg);
      const MPDecomposition dec = decompose(P, exps);
      res.report["params"] = params_json(P);
      res.report["factors"] = factors_json(P.factors);
      res.report["exps"] = exps;
      res.report["towers"] = towers_json(dec);
      res.report["a_matrix"] = a_matrix_json(dec.A);
      res.report["log_size"] = exps_log_size(P, exps);
      res.report["code_count"] = code_count_json(P);
      text << "log|C| = " << exps_log_size(P, exps) << " (base p)\n";
      for (std::size_t i = 0; i < dec.towers.size(); ++i) {
        text << "  C_" << dec.towers.size() - 1 - i << ": ";
        for (std::size_t s = 0; s < dec.towers[i].g.size(); ++s)
          text << (s ? " | " : "") << poly_to_string(dec.towers[i].g[s]);
        text << "\n";
      }
    } else if (subcommand == "recurse") {
      const ConstaParams P = make_params(cfg, F);
      const Exponents exps = required_exps(cfg);
      const auto children = recurse(P, exps);
      res.report["params"] = params_json(P);
      res.report["exps"] = exps;
      json arr = json::array();
      for (std::size_t j = children.size(); j-- > 0;) {
        json cj;
        cj["j"] = j;
        cj["exps"] = children[j];
        cj["log_size"] = [&] {
          std::uint64_t total = 0;
          const std::uint64_t bound = (P.pk / P.p()) * P.e();
          for (std::size_t t = 0; t < children[j].size(); ++t)
            total += (bound - children[j][t]) * static_cast<std::uint64_t>(P.factors[t].deg());
          return total * P.m();
        }();
        arr.push_back(std::move(cj));
        text << "C^(" << j << "): exps " << exps_text(children[j]) << "\n";
      }
      res.report["children"] = std::move(arr);
    } else if (subcommand == "distance") {
      const ConstaParams P = make_params(cfg, F);
      const Exponents exps = required_exps(cfg);
      std::uint64_t d = 0;
      res.report["params"] = params_json(P);
      res.report["exps"] = exps;
      res.report["distances"] = distances_json(P, exps, threshold, &d);
      text << "d = " << d << "\n";
    } else if (subcommand == "verify") {
      const ConstaParams P = make_params(cfg, F);
      const VerifyMode mode = parse_mode(cfg.mode);
      res.report["params"] = params_json(P);
      if (cfg.all) {
        const std::uint32_t bound = static_cast<std::uint32_t>(P.pk * P.e());
        if (!pow_within(bound + 1, P.factors.size(), 1u << 20))
          throw std::invalid_argument("verify --all: too many exponent vectors");
        Exponents exps(P.factors.size(), 0);
        std::uint64_t total = 0;
        json failures = json::array();
        do {
          const VerifyReport rep =
              verify_equivalence(P, exps, mode, cfg.samples, cfg.seed, threshold);
          ++total;
          if (!rep.passed()) {
            json fj;
            fj["exps"] = exps;
            fj["checks"] = checks_json(rep);
            failures.push_back(std::move(fj));
          }
        } while (next_exps(exps, bound));
        json vj;
        vj["total"] = total;
        vj["failures"] = failures;
        vj["passed"] = failures.empty();
        const bool ok = failures.empty();
        res.report["verification"] = std::move(vj);
        text << (ok ? "verified" : "FAILED") << " " << total << " exponent vectors\n";
        res.exit_code = ok ? 0 : 1;
      } else {
        const Exponents exps = required_exps(cfg);
        const VerifyReport rep =
            verify_equivalence(P, exps, mode, cfg.samples, cfg.seed, threshold);
        json vj;
        vj["checks"] = checks_json(rep);
        vj["passed"] = rep.passed();
        res.report["exps"] = exps;
        res.report["verification"] = std::move(vj);
        for (const auto& c : rep.checks)
          text << (c.passed ? "pass " : "FAIL ") << c.name
               << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        res.exit_code = rep.passed() ? 0 : 1;
      }
    } else if (subcommand == "report") {
      const ConstaParams P = make_params(cfg, F);
      const Exponents exps = required_exps(cfg);
      const MPDecomposition dec = decompose(P, exps);
      std::uint64_t d = 0;
      res.report["params"] = params_json(P);
      res.report["factors"] = factors_json(P.factors);
      res.report["exps"] = exps;
      res.report["towers"] = towers_json(dec);
      res.report["a_matrix"] = a_matrix_json(dec.A);
      res.report["log_size"] = exps_log_size(P, exps);
      res.report["code_count"] = code_count_json(P);
      res.report["distances"] = distances_json(P, exps, threshold, &d);
      const VerifyReport rep =
          verify_equivalence(P, exps, parse_mode(cfg.mode), cfg.samples, cfg.seed, threshold);
      json vj;
      vj["checks"] = checks_json(rep);
      vj["passed"] = rep.passed();
      res.report["verification"] = std::move(vj);
      text << "log|C| = " << exps_log_size(P, exps) << ", d = " << d << ", verification "
           << (rep.passed() ? "passed" : "FAILED") << "\n";
      res.exit_code = rep.passed() ? 0 : 1;
    } else {
      throw std::invalid_argument("unknown subcommand '" + subcommand + "'");
    }
  } catch (const VerificationError& ex) {
    res.exit_code = 1;
    res.report = json{{"error", ex.what()}};
    res.text = std::string("verification error: ") + ex.what() + "\n";
    return res;
  } catch (const std::exception& ex) {
    res.exit_code = 2;
    res.report = json{{"error", ex.what()}};
    res.text = std::string("error: ") + ex.what() + "\n";
    return res;
  }
  res.text = text.str();
  return res;
}

}  // namespace ccring::cli
