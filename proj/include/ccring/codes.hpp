#pragma once

// Linear codes over R materialized as F_{p^m}-row spaces: span/membership/
// size, cyclic codes from torsion towers, torsion extraction, matrix-product
// codes, NSC tests and exact distances.

#include <cstdint>
#include <vector>

#include "ccring/chain_ring.hpp"
#include "ccring/linalg.hpp"

namespace ccring {

using RWord = std::vector<RElem>;

// An R-submodule of R^N held as the reduced F_q-row basis of its image under
// the coordinate map R^N -> F_q^{eN} (u-adic coordinates per position,
// position major: word position i, layer s -> column i*e + s).
class CodeSpace {
 public:
  // Smallest R-submodule containing the generators.
  static CodeSpace span(const ChainRing& ring, std::size_t length, const std::vector<RWord>& gens);
  // From raw F_q rows; asserts the row space is closed under multiplication
  // by u (i.e. really is an R-submodule).
  static CodeSpace from_fq_rows(const ChainRing& ring, std::size_t length, linalg::Matrix rows);

  const ChainRing& ring() const { return ring_; }
  std::size_t length() const { return length_; }
  std::size_t fq_dim() const { return basis_.size(); }
  // a with |C| = p^a
  std::uint64_t log_size() const { return ring_.field().m() * fq_dim(); }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const RWord& w) const;
  bool contains_flat(linalg::Row row) const;

  // Exact minimum Hamming weight over R-coordinates (a position counts once
  // no matter which u-layer is nonzero). Throws on the zero code and when
  // the codeword count exceeds the threshold.
  std::uint64_t min_distance(std::uint64_t threshold = kDefaultEnumThreshold) const;
  RWord min_weight_word(std::uint64_t threshold = kDefaultEnumThreshold) const;

  const linalg::Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  linalg::Row flat_from_word(const RWord& w) const;
  RWord word_from_flat(const linalg::Row& r) const;

  bool operator==(const CodeSpace& o) const {
    return length_ == o.length_ && basis_ == o.basis_;
  }

 private:
  CodeSpace(ChainRing ring, std::size_t length) : ring_(std::move(ring)), length_(length) {}
  void assert_u_closed() const;

  ChainRing ring_;
  std::size_t length_;
  linalg::Matrix basis_;            // RREF
  std::vector<std::size_t> pivots_;
};

// Tower of e monic divisors of x^n - 1 with g_{e-1} | ... | g_1 | g_0;
// the sentinel x^n - 1 stands for a zero layer.
struct CyclicTower {
  std::uint64_t n = 0;
  std::vector<FqPoly> g;

  bool operator==(const CyclicTower& o) const { return n == o.n && g == o.g; }
};

// Throws unless every g_s is a monic divisor of x^n - 1 and the chain
// g_{s+1} | g_s holds.
void validate_tower(const FieldCtx& F, const CyclicTower& T, std::uint32_t e);

// The cyclic code over R generated by sum_s u^s g_s(x); its size is
// p^{m * sum_s (n - deg g_s)} (the sentinel contributes nothing).
CodeSpace cyclic_from_tower(const ChainRing& ring, const CyclicTower& T);

// Generator of the s-th torsion code of a shift-closed C (an ideal of
// R[x]/<x^n - 1>); the zero code yields the sentinel x^n - 1.
FqPoly torsion(const CodeSpace& C, std::uint32_t s);

// Constacyclic shift (c_0,...,c_{N-1}) -> (gamma*c_{N-1}, c_0,...,c_{N-2}).
RWord word_shift(const ChainRing& ring, const RWord& w, const RElem& gamma);

std::uint64_t word_weight(const RWord& w);

struct ProductMatrix {
  std::size_t alpha = 0, beta = 0;
  std::vector<FqElem> a;  // row major

  FqElem at(std::size_t i, std::size_t j) const { return a[i * beta + j]; }
  FqElem& at(std::size_t i, std::size_t j) { return a[i * beta + j]; }
  bool operator==(const ProductMatrix& o) const {
    return alpha == o.alpha && beta == o.beta && a == o.a;
  }
};

// Code of all column-major flattenings of [c_1,...,c_alpha] * A.
CodeSpace matrix_product(const std::vector<CodeSpace>& codes, const ProductMatrix& A);

bool is_frr(const FieldCtx& F, const ProductMatrix& A);

// Non-singular by columns: every t x t minor drawn from the first t rows is
// invertible, for all t <= alpha.
bool is_nsc(const FieldCtx& F, const ProductMatrix& A);

// min_i delta_i * d[i-1], delta_i the exact distance of the span of the
// first i rows of A. The caller asserts the codes behind d are nested
// (largest first) for the equality reading.
std::uint64_t mp_distance(const FieldCtx& F, const std::vector<std::uint64_t>& d,
                          const ProductMatrix& A,
                          std::uint64_t threshold = kDefaultEnumThreshold);

// Exact distance of the F_q-code spanned by `rows`.
std::uint64_t fq_code_min_distance(const FieldCtx& F, linalg::Matrix rows,
                                   std::uint64_t threshold = kDefaultEnumThreshold);

}  // namespace ccring
