#pragma once

// Shared oracles and generators for the unit and acceptance suites. Everything
// here recomputes results through routes independent of the library path it
// checks (full-space enumeration, divisibility filters, explicit matrices).

#include <vector>

#include "ccring/consta.hpp"

namespace ccring::testing {

inline RElem rand_relem(const ChainRing& R, SplitMix64& rng) {
  RElem x = R.zero();
  for (auto& c : x.c) c = rng.below(R.field().q());
  return x;
}

inline RWord rand_rword(const ChainRing& R, std::size_t len, SplitMix64& rng) {
  RWord w(len, R.zero());
  for (auto& x : w) x = rand_relem(R, rng);
  return w;
}

inline FqPoly rand_poly(const FieldCtx& F, std::size_t max_deg, SplitMix64& rng) {
  FqPoly p;
  p.c.resize(rng.below(max_deg + 1) + 1);
  for (auto& c : p.c) c = rng.below(F.q());
  return poly_trim(std::move(p));
}

// Product in R[x]/<x^len - (1+omega*u)>.
inline RWord rword_mul_consta(const ChainRing& R, const RElem& omega, const RWord& a,
                              const RWord& b) {
  const RElem unit = R.add(R.one(), R.mul(omega, R.u()));
  const std::size_t len = a.size();
  std::vector<RElem> t(2 * len, R.zero());
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j) t[i + j] = R.add(t[i + j], R.mul(a[i], b[j]));
  }
  RWord r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len));
  for (std::size_t d = len; d < t.size(); ++d)
    r[d - len] = R.add(r[d - len], R.mul(unit, t[d]));
  return r;
}

// Product in R_k[x]/<x^n - 1>.
inline std::vector<RkElem> rkword_mul_cyclic(const RkRing& Rk, const std::vector<RkElem>& a,
                                             const std::vector<RkElem>& b) {
  const std::size_t n = a.size();
  std::vector<RkElem> r(n, Rk.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      r[(i + j) % n] = Rk.add(r[(i + j) % n], Rk.mul(a[i], b[j]));
  }
  return r;
}

// Independent distance oracle over the field: enumerate every vector of
// F_q^n and keep those whose polynomial is a multiple of g (degree < n, so
// ideal membership is plain divisibility).
inline std::uint64_t oracle_fq_consta_distance(const FieldCtx& F, const FqPoly& g,
                                               std::uint64_t n) {
  std::vector<FqElem> word(n, 0);
  std::uint64_t best = n + 1;
  for (;;) {
    std::size_t i = 0;
    while (i < n) {
      word[i] = F.add(word[i], 1);
      if (word[i] != 0) break;
      ++i;
    }
    if (i == n) break;
    FqPoly c;
    c.c = word;
    c = poly_trim(std::move(c));
    if (c.is_zero() || !poly_divides(F, g, c)) continue;
    std::uint64_t w = 0;
    for (auto x : word)
      if (x != 0) ++w;
    best = std::min(best, w);
  }
  return best;
}

// F_q-matrix of psi_phi on the standard basis u^s x^i of R^N; rows indexed by
// (position*e + layer), columns by the flattened R_k^n coordinates.
inline linalg::Matrix psi_phi_matrix(const ConstaParams& P) {
  const std::size_t D = P.Rk.dim();
  linalg::Matrix M;
  M.reserve(P.N * P.e());
  for (std::uint64_t pos = 0; pos < P.N; ++pos)
    for (std::uint32_t layer = 0; layer < P.e(); ++layer) {
      RWord a(P.N, P.R.zero());
      a[pos].c[layer] = 1;
      const auto img = psi_phi(P, a);
      linalg::Row row(P.n * D);
      for (std::uint64_t j = 0; j < P.n; ++j) {
        const linalg::Row f = P.Rk.flatten(img[j]);
        std::copy(f.begin(), f.end(), row.begin() + static_cast<std::ptrdiff_t>(j * D));
      }
      M.push_back(std::move(row));
    }
  return M;
}

// Matrix of multiplication by z on R_k^n in flattened coordinates.
inline linalg::Matrix mult_matrix_rk(const RkRing& Rk, std::uint64_t n, const RkElem& z) {
  const std::size_t D = Rk.dim();
  linalg::Matrix M(n * D, linalg::Row(n * D, 0));
  for (std::uint64_t pos = 0; pos < n; ++pos)
    for (std::size_t r = 0; r < D; ++r) {
      linalg::Row unit(D, 0);
      unit[r] = 1;
      const linalg::Row img = Rk.flatten(Rk.mul(z, Rk.unflatten(unit)));
      for (std::size_t c = 0; c < D; ++c) M[pos * D + r][pos * D + c] = img[c];
    }
  return M;
}

// Generator polynomial of the cyclic code spanned (as an F_q-space) by the
// given length-n rows; the rows must form a shift-closed span.
inline FqPoly cyclic_generator_of_span(const FieldCtx& F, linalg::Matrix rows, std::uint64_t n) {
  const std::size_t dim = linalg::rank(F, rows);
  FqPoly g = poly_xn_minus(F, n, 1);
  for (const auto& r : rows) {
    FqPoly pr;
    pr.c = r;
    g = poly_gcd(F, g, poly_trim(std::move(pr)));
  }
  if (static_cast<std::uint64_t>(g.deg()) != n - dim)
    throw VerificationError("cyclic_generator_of_span: span is not an ideal");
  return g;
}

// Empirical s-th torsion generator of the cyclic code over R_k spanned by
// `rows` (flattened R_k^n vectors): tau applied to the preimage under
// multiplication by (v-1)^s.
inline FqPoly empirical_rk_torsion(const ConstaParams& P, const linalg::Matrix& rows,
                                   std::uint32_t s) {
  const RkRing& Rk = P.Rk;
  const FieldCtx& F = P.field();
  const std::size_t D = Rk.dim();
  const std::size_t dim = P.n * D;

  linalg::Matrix basis = rows;
  linalg::rref(F, basis);

  const RkElem z = Rk.pow(Rk.v_minus_1(), s);
  const linalg::Matrix M = mult_matrix_rk(Rk, P.n, z);

  // {x : x*M in rowspace(basis)}: left nullspace of [M; -basis], x-part
  linalg::Matrix stack = M;
  for (const auto& b : basis) {
    linalg::Row neg(dim);
    for (std::size_t j = 0; j < dim; ++j) neg[j] = F.neg(b[j]);
    stack.push_back(std::move(neg));
  }
  const linalg::Matrix null = linalg::left_nullspace(F, stack);

  linalg::Matrix tau_rows;
  for (const auto& y : null) {
    linalg::Row t(P.n, 0);
    for (std::uint64_t pos = 0; pos < P.n; ++pos) {
      linalg::Row mono(D);
      for (std::size_t j = 0; j < D; ++j) mono[j] = y[pos * D + j];
      t[pos] = Rk.tau(Rk.unflatten(mono));
    }
    tau_rows.push_back(std::move(t));
  }
  if (linalg::rank(F, tau_rows) == 0) return poly_xn_minus(F, P.n, 1);
  return cyclic_generator_of_span(F, std::move(tau_rows), P.n);
}

}  // namespace ccring::testing
