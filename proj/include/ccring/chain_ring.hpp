#pragma once

// Arithmetic in the chain ring R = F_{p^m}[u]/<u^e> and in the extension
// R_k = R[v]/<v^{p^k} - (1+omega*u)>, with u-adic and (v-1)-adic expansions.

#include <cstdint>
#include <string>
#include <vector>

#include "ccring/fq.hpp"
#include "ccring/linalg.hpp"

namespace ccring {

// Element of R: the e coordinates b_0..b_{e-1} in the u-basis.
struct RElem {
  std::vector<FqElem> c;

  bool operator==(const RElem& o) const { return c == o.c; }
  bool operator!=(const RElem& o) const { return !(*this == o); }
  bool is_zero() const {
    for (auto x : c)
      if (x != 0) return false;
    return true;
  }
};

class ChainRing {
 public:
  ChainRing(FieldCtx field, std::uint32_t e);

  const FieldCtx& field() const { return F_; }
  std::uint32_t e() const { return e_; }

  RElem zero() const { return RElem{std::vector<FqElem>(e_, 0)}; }
  RElem one() const;
  RElem u() const;  // zero when e == 1
  RElem from_field(FqElem a) const;

  RElem add(const RElem& a, const RElem& b) const;
  RElem sub(const RElem& a, const RElem& b) const;
  RElem neg(const RElem& a) const;
  RElem mul(const RElem& a, const RElem& b) const;
  RElem mul_field(const RElem& a, FqElem s) const;
  RElem pow(RElem a, std::uint64_t n) const;

  // Units are exactly the elements with b_0 != 0.
  bool is_unit(const RElem& a) const;
  RElem inverse(const RElem& a) const;  // throws on a non-unit

  // The u-adic coordinates (b_0,...,b_{e-1}); b_0 is tau of the element.
  std::vector<FqElem> u_adic(const RElem& a) const;

  std::string to_string(const RElem& a) const;
  // "b0,b1,...": shorter inputs are zero-padded to e entries.
  RElem parse(const std::string& text) const;

  bool operator==(const ChainRing& o) const { return F_ == o.F_ && e_ == o.e_; }

 private:
  void check(const RElem& a) const;

  FieldCtx F_;
  std::uint32_t e_;
};

// Element of R_k in monomial coordinates: coefficients of v^0..v^{p^k - 1}.
struct RkElem {
  std::vector<RElem> c;

  bool operator==(const RkElem& o) const { return c == o.c; }
  bool operator!=(const RkElem& o) const { return !(*this == o); }
  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

class RkRing {
 public:
  // omega must be a unit of R.
  RkRing(ChainRing base, std::uint32_t k, RElem omega);

  const ChainRing& base() const { return R_; }
  const FieldCtx& field() const { return R_.field(); }
  std::uint32_t k() const { return k_; }
  std::uint64_t pk() const { return pk_; }
  // F_q-dimension p^k * e
  std::uint64_t dim() const { return pk_ * R_.e(); }
  const RElem& omega() const { return omega_; }
  const RElem& unit_1_wu() const { return unit_1_wu_; }  // 1 + omega*u

  RkElem zero() const;
  RkElem one() const;
  RkElem v() const;  // reduces to 1 + omega*u when p^k == 1
  RkElem from_base(const RElem& a) const;
  RkElem v_minus_1() const;

  RkElem add(const RkElem& a, const RkElem& b) const;
  RkElem sub(const RkElem& a, const RkElem& b) const;
  RkElem neg(const RkElem& a) const;
  // Product reduced by v^{p^k} = 1 + omega*u.
  RkElem mul(const RkElem& a, const RkElem& b) const;
  RkElem pow(RkElem a, std::uint64_t n) const;

  // Monomial coordinates flattened over F_q, v-power major: u^i v^j sits at
  // index j*e + i.
  linalg::Row flatten(const RkElem& a) const;
  RkElem unflatten(const linalg::Row& r) const;

  // Coefficients a_s of the unique expansion sum a_s (v-1)^s, a_s in F_q.
  std::vector<FqElem> v1_expansion(const RkElem& a) const;
  RkElem from_v1(const std::vector<FqElem>& a) const;

  // a_0 of the (v-1)-expansion: the residue map onto F_{p^m}.
  FqElem tau(const RkElem& a) const;

  // Smallest t with (v-1)^t = 0, found by repeated multiplication.
  std::uint32_t nilpotency_index() const;

  // Row s is the flattening of (v-1)^s.
  const linalg::Matrix& v1_forward() const { return v1_fwd_; }
  const linalg::Matrix& v1_inverse() const { return v1_inv_; }

 private:
  void check(const RkElem& a) const;

  ChainRing R_;
  std::uint32_t k_;
  std::uint64_t pk_;
  RElem omega_;
  RElem unit_1_wu_;
  linalg::Matrix v1_fwd_, v1_inv_;
};

}  // namespace ccring
