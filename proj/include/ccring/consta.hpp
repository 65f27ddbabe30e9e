#pragma once

// (1+omega*u)-constacyclic codes of length p^k*n over R: parameters, the
// monomial map, the product matrix A_{p^k}, the ring isomorphism onto
// R_k[x]/<x^n - 1>, matrix-product decomposition, iterative construction,
// distance certification and equivalence verification.

#include <cstdint>
#include <string>
#include <vector>

#include "ccring/chain_ring.hpp"
#include "ccring/codes.hpp"

namespace ccring {

struct ConstaParams {
  ConstaParams(ChainRing ring, RkRing rk, RElem om)
      : R(std::move(ring)), Rk(std::move(rk)), omega(std::move(om)) {}

  ChainRing R;
  RkRing Rk;
  RElem omega;

  std::uint32_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t N = 0;         // p^k * n
  std::uint64_t pk = 0;        // p^k
  std::uint64_t pkl = 0;       // p^{k+l}
  std::uint32_t l = 0;         // smallest positive l with p^l >= e
  std::uint64_t n_prime = 0;   // n' with n'*n = 1 (mod p^{k+l}), 1 <= n' < p^{k+l}
  std::uint64_t q = 0;         // n' = q*p^k + n''
  std::uint64_t n_dprime = 0;  // n'' in [1, p^k), coprime to p

  // canonical factorization of x^n - 1 over F_{p^m}
  std::vector<FqPoly> factors;

  const FieldCtx& field() const { return R.field(); }
  std::uint64_t p() const { return R.field().p(); }
  std::uint32_t m() const { return R.field().m(); }
  std::uint32_t e() const { return R.e(); }
};

// Requires k >= 1 (length-n codes, k = 0, are reached through eta_for_k0),
// gcd(p, n) = 1 and omega a unit.
ConstaParams derive_params(const FieldCtx& F, std::uint32_t e, std::uint32_t k, std::uint64_t n,
                           const RElem& omega);

// rho(j + lambda*n) = j + n*(lambda - j*n'' mod p^k)
std::uint64_t rho(const ConstaParams& P, std::uint64_t i);

// Permutation + unit diagonal:
//   (M w)_{j+lambda*n} = (1+omega*u)^{j*q + (t + j*n'' - lambda)/p^k} * w_{rho(j+lambda*n)}
// with t the block index of rho(j+lambda*n). The carry term makes the map the
// exact coordinate form of the ring isomorphism; without it the image of a
// code need not land in the matrix product.
struct MonomialMap {
  std::vector<std::uint64_t> perm, inv_perm;
  std::vector<RElem> scale, inv_scale;
};

MonomialMap monomial_map(const ConstaParams& P);
RWord apply_map(const ChainRing& ring, const MonomialMap& M, const RWord& w);
RWord apply_map_inverse(const ChainRing& ring, const MonomialMap& M, const RWord& w);

// A_{p^k} = [(-1)^{p^k-i-j+1} binom(p^k-i, j-1)] mod p (binomials by Lucas);
// the direct formula is asserted against the Kronecker recursion
// A_{p^k} = A_p (x) A_{p^{k-1}}.
ProductMatrix a_matrix(std::uint64_t p, std::uint32_t k);

ProductMatrix kronecker(std::uint64_t p, const ProductMatrix& a, const ProductMatrix& b);

using Exponents = std::vector<std::uint32_t>;

void validate_exponents(const ConstaParams& P, const Exponents& exps);
// m * sum_t (p^k*e - i_t) * deg f_t
std::uint64_t exps_log_size(const ConstaParams& P, const Exponents& exps);
// prod_t f_t^{i_t} over F_q, unreduced
FqPoly exps_generator(const ConstaParams& P, const Exponents& exps);

// Span of {x^i * G : i < length} inside R[x]/<x^length - (1+omega*u)>.
CodeSpace consta_span(const ChainRing& ring, std::uint64_t length, const RElem& omega,
                      const FqPoly& G);
// The module generators themselves (the length constacyclic shifts of G).
std::vector<RWord> consta_generators(const ChainRing& ring, std::uint64_t length,
                                     const RElem& omega, const FqPoly& G);

struct ConstaCode {
  FqPoly G;
  std::vector<RWord> generators;
  CodeSpace space;
};

// Builds C_{(i_1,...,i_r)} and asserts its size against the exponent formula.
ConstaCode constacode_from_exponents(const ConstaParams& P, const Exponents& exps);

// g_s = prod_{i_t > s} f_t for s = 0..p^k*e - 1.
std::vector<FqPoly> torsion_generators(const ConstaParams& P, const Exponents& exps);

// Towers listed in bracket order: towers[0] is C_{p^k-1}, towers.back() is C_0.
struct MPDecomposition {
  std::vector<CyclicTower> towers;
  ProductMatrix A;
  MonomialMap map;
};

MPDecomposition decompose(const ConstaParams& P, const Exponents& exps);

// The ring isomorphism R[x]/<x^N - (1+omega*u)> -> R_k[x]/<x^n - 1>:
// position j receives v^{n'*j mod p^{k+l}} * (sum_t a_{j+tn} v^t).
std::vector<RkElem> psi_phi(const ConstaParams& P, const RWord& a);

// Child exponent vectors of the length-p^{k-1}*n codes C^{(j)}, j = 0..p-1:
// the exponent of f_t in C^{(j)} counts pairs (lambda, l) with
// i_t > lambda*p^k + j*p^{k-1} + l.
std::vector<Exponents> recurse(const ConstaParams& P, const Exponents& exps);

// delta_j for j = 1..p^k from the closed form, each value cross-checked
// against the brute-force distance of <(x-1)^{p^k-j}> in F_q[x]/<x^{p^k}-1>
// whenever that enumeration fits the threshold. Disagreement throws.
std::vector<std::uint64_t> delta_profile(std::uint64_t p, std::uint32_t k, const FieldCtx& F,
                                         std::uint64_t threshold = kDefaultEnumThreshold);

// d = min over bracket positions t of delta_t * d(C_{p^k-t}); cross-checked
// against the iterative route min{p*d^{(p-1)},...,d^{(0)}} whenever every
// enumeration on that route fits the threshold.
std::uint64_t constacyclic_distance(const ConstaParams& P, const Exponents& exps,
                                    std::uint64_t threshold = kDefaultEnumThreshold);

// The iterative route on its own: recurse to k = 0 and enumerate the
// length-n codes directly.
std::uint64_t constacyclic_distance_recursive(const ConstaParams& P, const Exponents& exps,
                                              std::uint64_t threshold = kDefaultEnumThreshold);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

enum class VerifyMode { kFull, kSampled };

// Checks Theta(C) = [C_{p^k-1},...,C_0] * A_{p^k} by membership of the
// mapped module generators, size equality, and (full mode) the reverse
// inclusion through the inverse monomial map. Sampled mode replaces the
// reverse pass with `samples` seeded random codewords mapped forward.
// Failures are report entries, not exceptions.
VerifyReport verify_equivalence(const ConstaParams& P, const Exponents& exps, VerifyMode mode,
                                std::uint64_t samples = 32, std::uint64_t seed = 0,
                                std::uint64_t threshold = kDefaultEnumThreshold);

// Same checks against a caller-supplied decomposition (corruptible by tests).
VerifyReport verify_equivalence_with(const ConstaParams& P, const Exponents& exps,
                                     const MPDecomposition& dec, VerifyMode mode,
                                     std::uint64_t samples = 32, std::uint64_t seed = 0,
                                     std::uint64_t threshold = kDefaultEnumThreshold);

// The unique eta in R^x with eta^n = 1 + omega*u (k = 0 reduction):
// eta = (1+omega*u)^{n0'} with n0'*n = 1 (mod p^l). Requires gcd(p, n) = 1.
RElem eta_for_k0(const ChainRing& ring, std::uint64_t n, const RElem& omega);

// a^{-1} mod mod, for gcd(a, mod) = 1
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t mod);

}  // namespace ccring
