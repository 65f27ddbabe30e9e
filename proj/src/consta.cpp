#include "ccring/consta.hpp"

#include <algorithm>
#include <sstream>

namespace ccring {

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t mod) {
  a %= mod;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    std::int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("inv_mod_u64: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

ConstaParams derive_params(const FieldCtx& F, std::uint32_t e, std::uint32_t k, std::uint64_t n,
                           const RElem& omega) {
  if (k == 0) throw std::invalid_argument("derive_params: k must be >= 1 (use eta_for_k0)");
  if (n == 0) throw std::invalid_argument("derive_params: n must be positive");
  if (n % F.p() == 0) throw std::invalid_argument("derive_params: p divides n");

  ChainRing R(F, e);
  if (!R.is_unit(omega)) throw std::invalid_argument("derive_params: omega must be a unit");

  ConstaParams P(R, RkRing(R, k, omega), omega);
  P.k = k;
  P.n = n;
  P.pk = P.Rk.pk();

  P.l = 1;
  {
    std::uint64_t pl = F.p();
    while (pl < e) pl = checked_pow(F.p(), ++P.l);
  }

  P.pkl = checked_pow(F.p(), k + P.l);
  P.N = P.pk * n;
  P.n_prime = inv_mod_u64(n % P.pkl, P.pkl);
  P.q = P.n_prime / P.pk;
  P.n_dprime = P.n_prime % P.pk;
  if (P.n_dprime == 0 || P.n_dprime % F.p() == 0 || P.q > checked_pow(F.p(), P.l) - 1)
    throw std::logic_error("derive_params: n' split out of range");

  P.factors = factor_xn_minus_1(F, n);
  return P;
}

std::uint64_t rho(const ConstaParams& P, std::uint64_t i) {
  if (i >= P.N) throw std::invalid_argument("rho: index out of range");
  const std::uint64_t j = i % P.n;
  const std::uint64_t lambda = i / P.n;
  const std::uint64_t t = (lambda + P.pk - (j * P.n_dprime) % P.pk) % P.pk;
  return j + P.n * t;
}

MonomialMap monomial_map(const ConstaParams& P) {
  MonomialMap M;
  M.perm.resize(P.N);
  M.inv_perm.resize(P.N);
  M.scale.reserve(P.N);
  M.inv_scale.reserve(P.N);

  for (std::uint64_t i = 0; i < P.N; ++i) {
    M.perm[i] = rho(P, i);
    // scale exponent: x^{j+(t+j n')n} = (1+wu)^{(t + j n' - lambda)/p^k} x^{j+lambda n};
    // this is j*q plus the carry (t + j*n'' - lambda)/p^k, which the split
    // n' = q p^k + n'' alone does not capture.
    const std::uint64_t j = i % P.n;
    const std::uint64_t lambda = i / P.n;
    const std::uint64_t t = M.perm[i] / P.n;
    const std::uint64_t exp = j * P.q + (t + j * P.n_dprime - lambda) / P.pk;
    const RElem s = P.R.pow(P.Rk.unit_1_wu(), exp);
    M.scale.push_back(s);
    M.inv_scale.push_back(P.R.inverse(s));
  }
  for (std::uint64_t i = 0; i < P.N; ++i) M.inv_perm[M.perm[i]] = i;
  return M;
}

RWord apply_map(const ChainRing& ring, const MonomialMap& M, const RWord& w) {
  if (w.size() != M.perm.size()) throw std::invalid_argument("apply_map: length mismatch");
  RWord out(w.size(), ring.zero());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = ring.mul(M.scale[i], w[M.perm[i]]);
  return out;
}

RWord apply_map_inverse(const ChainRing& ring, const MonomialMap& M, const RWord& w) {
  if (w.size() != M.perm.size()) throw std::invalid_argument("apply_map_inverse: length mismatch");
  RWord out(w.size(), ring.zero());
  for (std::size_t i = 0; i < w.size(); ++i) out[M.perm[i]] = ring.mul(M.inv_scale[i], w[i]);
  return out;
}

// ------------------------------------------------------------------- A_{p^k}

namespace {

std::uint64_t binom_digit(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // a, b < p
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num % p == 0 ? 0 : num * inv_mod_u64(den, p) % p;
}

// binom(a, b) mod p by Lucas' theorem
std::uint64_t binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = 1;
  while (a || b) {
    r = r * binom_digit(a % p, b % p, p) % p;
    if (r == 0) return 0;
    a /= p;
    b /= p;
  }
  return r;
}

ProductMatrix a_matrix_direct(std::uint64_t p, std::uint32_t k) {
  const std::uint64_t pk = checked_pow(p, k);
  ProductMatrix A{pk, pk, std::vector<FqElem>(pk * pk, 0)};
  for (std::uint64_t i = 1; i <= pk; ++i) {
    for (std::uint64_t j = 1; j <= pk; ++j) {
      if (pk - i < j - 1) continue;  // binomial vanishes by convention
      std::uint64_t b = binom_mod_p(pk - i, j - 1, p);
      if ((pk - i - (j - 1)) % 2 == 1) b = (p - b) % p;  // (-1)^{p^k-i-j+1}
      A.at(i - 1, j - 1) = b;
    }
  }
  return A;
}

}  // namespace

ProductMatrix kronecker(std::uint64_t p, const ProductMatrix& a, const ProductMatrix& b) {
  ProductMatrix r{a.alpha * b.alpha, a.beta * b.beta,
                  std::vector<FqElem>(a.alpha * b.alpha * a.beta * b.beta, 0)};
  for (std::size_t i = 0; i < a.alpha; ++i)
    for (std::size_t j = 0; j < a.beta; ++j)
      for (std::size_t s = 0; s < b.alpha; ++s)
        for (std::size_t t = 0; t < b.beta; ++t)
          r.at(i * b.alpha + s, j * b.beta + t) = a.at(i, j) * b.at(s, t) % p;
  return r;
}

ProductMatrix a_matrix(std::uint64_t p, std::uint32_t k) {
  if (!is_prime_u64(p)) throw std::invalid_argument("a_matrix: p must be prime");
  ProductMatrix A = a_matrix_direct(p, k);
  if (k >= 2) {
    const ProductMatrix kron = kronecker(p, a_matrix_direct(p, 1), a_matrix(p, k - 1));
    if (!(kron == A))
      throw VerificationError("a_matrix: direct formula disagrees with Kronecker recursion");
  }
  return A;
}

// ---------------------------------------------------------------- exponents

void validate_exponents(const ConstaParams& P, const Exponents& exps) {
  if (exps.size() != P.factors.size())
    throw std::invalid_argument("exponents: expected one entry per factor of x^n - 1");
  const std::uint64_t bound = P.pk * P.e();
  for (auto i : exps)
    if (i > bound) throw std::invalid_argument("exponents: entry exceeds p^k * e");
}

std::uint64_t exps_log_size(const ConstaParams& P, const Exponents& exps) {
  validate_exponents(P, exps);
  const std::uint64_t bound = P.pk * P.e();
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < exps.size(); ++t)
    total += (bound - exps[t]) * static_cast<std::uint64_t>(P.factors[t].deg());
  return total * P.m();
}

FqPoly exps_generator(const ConstaParams& P, const Exponents& exps) {
  validate_exponents(P, exps);
  FqPoly G = poly_one();
  for (std::size_t t = 0; t < exps.size(); ++t)
    G = poly_mul(P.field(), G, poly_pow(P.field(), P.factors[t], exps[t]));
  return G;
}

std::vector<RWord> consta_generators(const ChainRing& ring, std::uint64_t length,
                                     const RElem& omega, const FqPoly& G) {
  const RElem unit = ring.add(ring.one(), ring.mul(omega, ring.u()));
  // embed G over R and fold x^{length + t} -> (1+omega*u) x^t
  std::vector<RElem> c(std::max<std::size_t>(G.c.size(), length), ring.zero());
  for (std::size_t i = 0; i < G.c.size(); ++i) c[i] = ring.from_field(G.c[i]);
  for (std::size_t d = c.size(); d-- > length;) {
    if (!c[d].is_zero()) c[d - length] = ring.add(c[d - length], ring.mul(unit, c[d]));
  }
  c.resize(length);

  std::vector<RWord> gens;
  gens.reserve(length);
  RWord w(c.begin(), c.end());
  for (std::uint64_t i = 0; i < length; ++i) {
    gens.push_back(w);
    w = word_shift(ring, w, unit);
  }
  return gens;
}

CodeSpace consta_span(const ChainRing& ring, std::uint64_t length, const RElem& omega,
                      const FqPoly& G) {
  return CodeSpace::span(ring, length, consta_generators(ring, length, omega, G));
}

ConstaCode constacode_from_exponents(const ConstaParams& P, const Exponents& exps) {
  FqPoly G = exps_generator(P, exps);
  std::vector<RWord> gens = consta_generators(P.R, P.N, P.omega, G);
  CodeSpace space = CodeSpace::span(P.R, P.N, gens);
  if (space.log_size() != exps_log_size(P, exps))
    throw VerificationError("constacode: spanned size disagrees with the exponent formula");
  return ConstaCode{std::move(G), std::move(gens), std::move(space)};
}

std::vector<FqPoly> torsion_generators(const ConstaParams& P, const Exponents& exps) {
  validate_exponents(P, exps);
  const std::uint64_t layers = P.pk * P.e();
  std::vector<FqPoly> gs;
  gs.reserve(layers);
  for (std::uint64_t s = 0; s < layers; ++s) {
    FqPoly g = poly_one();
    for (std::size_t t = 0; t < exps.size(); ++t)
      if (exps[t] > s) g = poly_mul(P.field(), g, P.factors[t]);
    gs.push_back(std::move(g));
  }
  return gs;
}

MPDecomposition decompose(const ConstaParams& P, const Exponents& exps) {
  const std::vector<FqPoly> gs = torsion_generators(P, exps);
  MPDecomposition dec;
  dec.towers.reserve(P.pk);
  for (std::uint64_t idx = 0; idx < P.pk; ++idx) {
    const std::uint64_t rho_ = P.pk - 1 - idx;  // bracket order: C_{p^k-1} first
    CyclicTower T;
    T.n = P.n;
    for (std::uint32_t i = 0; i < P.e(); ++i) T.g.push_back(gs[i * P.pk + rho_]);
    validate_tower(P.field(), T, P.e());
    dec.towers.push_back(std::move(T));
  }

  // nesting C_{p^k-1} >= ... >= C_0, layerwise by divisibility
  std::uint64_t total = 0;
  for (std::size_t idx = 0; idx < dec.towers.size(); ++idx) {
    for (std::uint32_t i = 0; i < P.e(); ++i) {
      total += (P.n - static_cast<std::uint64_t>(dec.towers[idx].g[i].deg())) * P.m();
      if (idx + 1 < dec.towers.size() &&
          !poly_divides(P.field(), dec.towers[idx].g[i], dec.towers[idx + 1].g[i]))
        throw VerificationError("decompose: towers are not nested");
    }
  }
  if (total != exps_log_size(P, exps))
    throw VerificationError("decompose: tower sizes do not sum to the code size");

  dec.A = a_matrix(P.p(), P.k);
  dec.map = monomial_map(P);
  return dec;
}

std::vector<RkElem> psi_phi(const ConstaParams& P, const RWord& a) {
  if (a.size() != P.N) throw std::invalid_argument("psi_phi: word length mismatch");
  const RkRing& Rk = P.Rk;

  std::vector<RkElem> vpow(P.pkl);
  vpow[0] = Rk.one();
  for (std::uint64_t i = 1; i < P.pkl; ++i) vpow[i] = Rk.mul(vpow[i - 1], Rk.v());

  std::vector<RkElem> out(P.n, Rk.zero());
  for (std::uint64_t j = 0; j < P.n; ++j) {
    RkElem acc = Rk.zero();
    for (std::uint64_t t = 0; t < P.pk; ++t) acc.c[t] = a[j + t * P.n];
    out[j] = Rk.mul(vpow[(P.n_prime * j) % P.pkl], acc);
  }
  return out;
}

namespace {

std::uint64_t level_log_size(const ConstaParams& P, const Exponents& exps, std::uint32_t k) {
  const std::uint64_t bound = checked_pow(P.p(), k) * P.e();
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < exps.size(); ++t)
    total += (bound - exps[t]) * static_cast<std::uint64_t>(P.factors[t].deg());
  return total * P.m();
}

std::vector<Exponents> recurse_level(const ConstaParams& P, const Exponents& exps,
                                     std::uint32_t k) {
  const std::uint64_t pk = checked_pow(P.p(), k);
  const std::uint64_t pk1 = pk / P.p();
  std::vector<Exponents> out;
  out.reserve(P.p());
  for (std::uint64_t j = 0; j < P.p(); ++j) {
    Exponents child(exps.size(), 0);
    for (std::size_t t = 0; t < exps.size(); ++t) {
      std::uint32_t count = 0;
      for (std::uint64_t lambda = 0; lambda < P.e(); ++lambda)
        for (std::uint64_t ll = 0; ll < pk1; ++ll)
          if (exps[t] > lambda * pk + j * pk1 + ll) ++count;
      child[t] = count;
    }
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

std::vector<Exponents> recurse(const ConstaParams& P, const Exponents& exps) {
  validate_exponents(P, exps);
  if (P.k == 0) throw std::invalid_argument("recurse: k must be >= 1");
  return recurse_level(P, exps, P.k);
}

// -------------------------------------------------------------- delta profile

std::vector<std::uint64_t> delta_profile(std::uint64_t p, std::uint32_t k, const FieldCtx& F,
                                         std::uint64_t threshold) {
  if (F.p() != p) throw std::invalid_argument("delta_profile: field characteristic mismatch");
  const std::uint64_t pk = checked_pow(p, k);
  std::vector<std::uint64_t> delta(pk, 0);

  for (std::uint64_t j = 1; j <= pk; ++j) {
    std::uint64_t value = 0;
    if (j == pk) {
      value = 1;
    } else {
      for (std::uint32_t s = 1; k >= 1 && s <= k - 1; ++s) {
        const std::uint64_t hi = checked_pow(p, k - s), lo = checked_pow(p, k - s - 1);
        for (std::uint64_t t = 1; t <= p - 1; ++t) {
          if (hi - t * lo <= j && j <= hi - t * lo + lo - 1) {
            const std::uint64_t v = (t + 1) * checked_pow(p, s);
            if (value != 0 && value != v)
              throw VerificationError("delta_profile: overlapping closed-form ranges disagree");
            value = v;
          }
        }
      }
      const std::uint64_t pk1 = pk / p;
      for (std::uint64_t g = 1; g <= p - 1; ++g) {
        if (pk - g * pk1 <= j && j <= pk - g * pk1 + pk1 - 1) {
          if (value != 0 && value != g + 1)
            throw VerificationError("delta_profile: overlapping closed-form ranges disagree");
          value = g + 1;
        }
      }
    }
    if (value == 0) throw VerificationError("delta_profile: closed form left a gap");

    // oracle: brute-force distance of <(x-1)^{p^k-j}> in F_q[x]/<x^{p^k}-1>
    if (pow_within(F.q(), j, threshold)) {
      FqPoly xm1{{F.neg(1), 1}};
      const std::uint64_t bf =
          fq_consta_min_distance(F, poly_pow(F, xm1, pk - j), pk, 1, threshold);
      if (bf != value)
        throw VerificationError("delta_profile: closed form disagrees with brute force");
    }
    delta[j - 1] = value;
  }
  return delta;
}

// ----------------------------------------------------------------- distances

namespace {

std::uint64_t distance_recursive_impl(const ConstaParams& P, const Exponents& exps,
                                      std::uint32_t k, std::uint64_t threshold) {
  if (k == 0) {
    FqPoly G = poly_one();
    for (std::size_t t = 0; t < exps.size(); ++t)
      G = poly_mul(P.field(), G, poly_pow(P.field(), P.factors[t], exps[t]));
    return consta_span(P.R, P.n, P.omega, G).min_distance(threshold);
  }
  const auto children = recurse_level(P, exps, k);
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t j = 0; j < P.p(); ++j) {
    if (level_log_size(P, children[j], k - 1) == 0) continue;  // zero constituent
    best = std::min(best, (j + 1) * distance_recursive_impl(P, children[j], k - 1, threshold));
  }
  return best;
}

bool recursive_route_feasible(const ConstaParams& P, const Exponents& exps, std::uint32_t k,
                              std::uint64_t threshold) {
  const std::uint64_t log_sz = level_log_size(P, exps, k);
  if (log_sz == 0) return true;  // skipped by the caller
  if (k == 0) return pow_within(P.p(), log_sz, threshold);
  for (const auto& child : recurse_level(P, exps, k))
    if (!recursive_route_feasible(P, child, k - 1, threshold)) return false;
  return true;
}

}  // namespace

std::uint64_t constacyclic_distance_recursive(const ConstaParams& P, const Exponents& exps,
                                              std::uint64_t threshold) {
  validate_exponents(P, exps);
  if (exps_log_size(P, exps) == 0)
    throw std::invalid_argument("constacyclic_distance: zero code");
  return distance_recursive_impl(P, exps, P.k, threshold);
}

std::uint64_t constacyclic_distance(const ConstaParams& P, const Exponents& exps,
                                    std::uint64_t threshold) {
  validate_exponents(P, exps);
  if (exps_log_size(P, exps) == 0)
    throw std::invalid_argument("constacyclic_distance: zero code");

  const std::vector<FqPoly> gs = torsion_generators(P, exps);
  const std::vector<std::uint64_t> delta = delta_profile(P.p(), P.k, P.field(), threshold);

  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t rho_ = 0; rho_ < P.pk; ++rho_) {
    CyclicTower T;
    T.n = P.n;
    std::uint64_t tlog = 0;
    for (std::uint32_t i = 0; i < P.e(); ++i) {
      T.g.push_back(gs[i * P.pk + rho_]);
      tlog += (P.n - static_cast<std::uint64_t>(T.g.back().deg())) * P.m();
    }
    if (tlog == 0) continue;  // zero constituent contributes no codewords
    const std::uint64_t d_rho = cyclic_from_tower(P.R, T).min_distance(threshold);
    // bracket position of C_rho is t = p^k - rho, paired with delta_t
    best = std::min(best, delta[P.pk - 1 - rho_] * d_rho);
  }

  if (recursive_route_feasible(P, exps, P.k, threshold)) {
    const std::uint64_t alt = distance_recursive_impl(P, exps, P.k, threshold);
    if (alt != best)
      throw VerificationError("constacyclic_distance: tower route and iterative route disagree");
  }
  return best;
}

// -------------------------------------------------------------- verification

VerifyReport verify_equivalence_with(const ConstaParams& P, const Exponents& exps,
                                     const MPDecomposition& dec, VerifyMode mode,
                                     std::uint64_t samples, std::uint64_t seed,
                                     std::uint64_t threshold) {
  (void)threshold;
  VerifyReport rep;
  const auto add = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // tower nesting (layerwise divisibility)
  {
    bool ok = true;
    for (std::size_t idx = 0; ok && idx + 1 < dec.towers.size(); ++idx)
      for (std::uint32_t i = 0; ok && i < P.e(); ++i)
        if (!poly_divides(P.field(), dec.towers[idx].g[i], dec.towers[idx + 1].g[i])) ok = false;
    add("towers_nested", ok, ok ? "" : "bracket sequence is not decreasing");
  }

  const ConstaCode code = constacode_from_exponents(P, exps);

  std::vector<CodeSpace> constituents;
  constituents.reserve(dec.towers.size());
  for (const auto& T : dec.towers) constituents.push_back(cyclic_from_tower(P.R, T));
  const CodeSpace mp = matrix_product(constituents, dec.A);

  {
    std::ostringstream os;
    os << "log|C| = " << code.space.log_size() << ", log|MP| = " << mp.log_size();
    add("size_equal", code.space.log_size() == mp.log_size(), os.str());
  }

  {
    std::size_t pass = 0;
    for (const auto& g : code.generators)
      if (mp.contains(apply_map(P.R, dec.map, g))) ++pass;
    std::ostringstream os;
    os << pass << "/" << code.generators.size() << " generator images in the matrix product";
    add("forward_membership", pass == code.generators.size(), os.str());
  }

  if (mode == VerifyMode::kFull) {
    std::size_t pass = 0;
    for (const auto& row : mp.basis())
      if (code.space.contains(apply_map_inverse(P.R, dec.map, mp.word_from_flat(row)))) ++pass;
    std::ostringstream os;
    os << pass << "/" << mp.basis().size() << " basis pullbacks in C";
    add("reverse_membership", pass == mp.basis().size(), os.str());
  } else {
    SplitMix64 rng(seed);
    std::size_t pass = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      linalg::Row flat(P.N * P.e(), 0);
      for (const auto& row : code.space.basis()) {
        const FqElem c = rng.below(P.field().q());
        if (c == 0) continue;
        for (std::size_t j = 0; j < flat.size(); ++j)
          flat[j] = P.field().add(flat[j], P.field().mul(c, row[j]));
      }
      if (mp.contains(apply_map(P.R, dec.map, code.space.word_from_flat(flat)))) ++pass;
    }
    std::ostringstream os;
    os << pass << "/" << samples << " sampled codeword images in the matrix product";
    add("sampled_membership", pass == samples, os.str());
  }

  return rep;
}

VerifyReport verify_equivalence(const ConstaParams& P, const Exponents& exps, VerifyMode mode,
                                std::uint64_t samples, std::uint64_t seed,
                                std::uint64_t threshold) {
  return verify_equivalence_with(P, exps, decompose(P, exps), mode, samples, seed, threshold);
}

RElem eta_for_k0(const ChainRing& ring, std::uint64_t n, const RElem& omega) {
  const FieldCtx& F = ring.field();
  if (n == 0 || n % F.p() == 0) throw std::invalid_argument("eta_for_k0: need gcd(p, n) = 1");
  if (!ring.is_unit(omega)) throw std::invalid_argument("eta_for_k0: omega must be a unit");

  std::uint32_t l = 1;
  std::uint64_t pl = F.p();
  while (pl < ring.e()) pl = checked_pow(F.p(), ++l);

  const RElem unit = ring.add(ring.one(), ring.mul(omega, ring.u()));
  const RElem eta = ring.pow(unit, inv_mod_u64(n % pl, pl));
  if (!(ring.pow(eta, n) == unit))
    throw VerificationError("eta_for_k0: eta^n != 1 + omega*u");
  return eta;
}

}  // namespace ccring
