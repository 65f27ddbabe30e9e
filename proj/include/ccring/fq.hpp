#pragma once

// Exact arithmetic in F_{p^m}, polynomials over it, factorization of x^n - 1
// and brute-force minimum distances of constacyclic codes over the field.

#include <cstdint>
#include <string>
#include <vector>

#include "ccring/common.hpp"

namespace ccring {

// Field element, encoded as the base-p integer of its coordinate vector in
// the polynomial basis, low-degree digit first. 0 and 1 encode themselves.
using FqElem = std::uint64_t;

class FieldCtx {
 public:
  // Prime field F_p.
  explicit FieldCtx(std::uint64_t p) : FieldCtx(p, 1, {}) {}

  // F_{p^m}. `modulus` is a monic irreducible of degree m over F_p given as
  // coefficients mod p, low degree first (size m+1). When empty and m >= 2
  // the lexicographically smallest monic irreducible is selected
  // (coefficients compared low-degree-first as integers).
  FieldCtx(std::uint64_t p, std::uint32_t m, std::vector<std::uint64_t> modulus = {});

  std::uint64_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }

  // Empty for m == 1 (prime fields carry no modulus).
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;  // throws on a == 0
  FqElem pow(FqElem a, std::uint64_t e) const;

  // Residue -> element of the prime subfield.
  FqElem from_int(std::uint64_t v) const { return v % p_; }

  std::vector<std::uint64_t> digits(FqElem a) const;
  FqElem from_digits(const std::vector<std::uint64_t>& d) const;

  bool operator==(const FieldCtx& o) const {
    return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
  }
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

 private:
  std::uint64_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> mod_;
};

// Polynomial over F_{p^m}: coefficients low degree first, no trailing zeros
// (the zero polynomial is the empty vector).
struct FqPoly {
  std::vector<FqElem> c;

  bool is_zero() const { return c.empty(); }
  // degree of the zero polynomial is -1
  std::int64_t deg() const { return static_cast<std::int64_t>(c.size()) - 1; }
  bool operator==(const FqPoly& o) const { return c == o.c; }
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
};

FqPoly poly_trim(FqPoly a);
FqPoly poly_one();
FqPoly poly_x();
// x^n - gamma
FqPoly poly_xn_minus(const FieldCtx& F, std::uint64_t n, FqElem gamma);

FqPoly poly_add(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_neg(const FieldCtx& F, const FqPoly& a);
FqPoly poly_mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const FieldCtx& F, const FqPoly& a, FqElem s);
FqPoly poly_shift(const FqPoly& a, std::uint64_t k);  // multiply by x^k
FqPoly poly_pow(const FieldCtx& F, const FqPoly& a, std::uint64_t e);
bool poly_is_monic(const FqPoly& a);
FqPoly poly_make_monic(const FieldCtx& F, const FqPoly& a);

// a = q*b + r with deg r < deg b; throws on b == 0.
std::pair<FqPoly, FqPoly> poly_divmod(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
bool poly_divides(const FieldCtx& F, const FqPoly& d, const FqPoly& a);  // d | a
// Monic gcd; gcd(0,0) = 0 by convention.
FqPoly poly_gcd(const FieldCtx& F, FqPoly a, FqPoly b);
FqPoly poly_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_powmod(const FieldCtx& F, FqPoly base, std::uint64_t e, const FqPoly& mod);

// Irreducibility over F_{p^m} via Frobenius/gcd probing.
bool poly_is_irreducible(const FieldCtx& F, const FqPoly& f);

// Canonical order: ascending degree, ties broken lexicographically on the
// coefficient sequence, low degree first, elements compared as integers.
bool poly_canonical_less(const FqPoly& a, const FqPoly& b);

// "c0,c1,...,cd"; the zero polynomial prints "0".
std::string poly_to_string(const FqPoly& a);
FqPoly poly_parse(const FieldCtx& F, const std::string& text);

// Monic irreducible factors of x^n - 1 in canonical order. Requires
// gcd(p, n) = 1. Factor degrees come from the p^m-cyclotomic cosets mod n;
// each factor is the minimal polynomial of the coset's root powers in the
// splitting field F_{p^{m*ord}}.
std::vector<FqPoly> factor_xn_minus_1(const FieldCtx& F, std::uint64_t n);

// Exact minimum Hamming weight of the nonzero multiples of g in
// F_q[x]/(x^n - gamma). Requires g | x^n - gamma, g != x^n - gamma, and
// q^(n - deg g) within the threshold.
std::uint64_t fq_consta_min_distance(const FieldCtx& F, const FqPoly& g, std::uint64_t n,
                                     FqElem gamma,
                                     std::uint64_t threshold = kDefaultEnumThreshold);

bool is_prime_u64(std::uint64_t n);

}  // namespace ccring
