#include "ccring/chain_ring.hpp"

#include <sstream>

namespace ccring {

ChainRing::ChainRing(FieldCtx field, std::uint32_t e) : F_(std::move(field)), e_(e) {
  if (e == 0) throw std::invalid_argument("ChainRing: e must be positive");
}

void ChainRing::check(const RElem& a) const {
  if (a.c.size() != e_) throw std::invalid_argument("ChainRing: element has wrong length");
}

RElem ChainRing::one() const {
  RElem r = zero();
  r.c[0] = 1;
  return r;
}

RElem ChainRing::u() const {
  RElem r = zero();
  if (e_ > 1) r.c[1] = 1;
  return r;
}

RElem ChainRing::from_field(FqElem a) const {
  RElem r = zero();
  r.c[0] = a;
  return r;
}

RElem ChainRing::add(const RElem& a, const RElem& b) const {
  check(a);
  check(b);
  RElem r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) r.c[i] = F_.add(a.c[i], b.c[i]);
  return r;
}

RElem ChainRing::neg(const RElem& a) const {
  check(a);
  RElem r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) r.c[i] = F_.neg(a.c[i]);
  return r;
}

RElem ChainRing::sub(const RElem& a, const RElem& b) const { return add(a, neg(b)); }

RElem ChainRing::mul(const RElem& a, const RElem& b) const {
  check(a);
  check(b);
  RElem r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (a.c[i] == 0) continue;
    for (std::uint32_t j = 0; i + j < e_; ++j)
      r.c[i + j] = F_.add(r.c[i + j], F_.mul(a.c[i], b.c[j]));
  }
  return r;
}

RElem ChainRing::mul_field(const RElem& a, FqElem s) const {
  check(a);
  RElem r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) r.c[i] = F_.mul(a.c[i], s);
  return r;
}

RElem ChainRing::pow(RElem a, std::uint64_t n) const {
  RElem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

bool ChainRing::is_unit(const RElem& a) const {
  check(a);
  return a.c[0] != 0;
}

RElem ChainRing::inverse(const RElem& a) const {
  if (!is_unit(a)) throw std::invalid_argument("ChainRing::inverse: not a unit");
  // triangular solve of a*g = 1 layer by layer
  RElem g = zero();
  const FqElem b0inv = F_.inv(a.c[0]);
  g.c[0] = b0inv;
  for (std::uint32_t s = 1; s < e_; ++s) {
    FqElem acc = 0;
    for (std::uint32_t i = 1; i <= s; ++i) acc = F_.add(acc, F_.mul(a.c[i], g.c[s - i]));
    g.c[s] = F_.neg(F_.mul(b0inv, acc));
  }
  return g;
}

std::vector<FqElem> ChainRing::u_adic(const RElem& a) const {
  check(a);
  return a.c;
}

std::string ChainRing::to_string(const RElem& a) const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (i) os << ',';
    os << a.c[i];
  }
  return os.str();
}

RElem ChainRing::parse(const std::string& text) const {
  RElem r = zero();
  std::stringstream ss(text);
  std::string item;
  std::size_t idx = 0;
  while (std::getline(ss, item, ',')) {
    if (idx >= e_) throw std::invalid_argument("RElem parse: more than e coordinates");
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("RElem parse: bad coordinate '" + item + "'");
    if (v >= F_.q()) throw std::invalid_argument("RElem parse: coordinate out of range");
    r.c[idx++] = v;
  }
  if (idx == 0) throw std::invalid_argument("RElem parse: empty text");
  return r;
}

// ------------------------------------------------------------------ RkRing

RkRing::RkRing(ChainRing base, std::uint32_t k, RElem omega)
    : R_(std::move(base)), k_(k), omega_(std::move(omega)) {
  if (!R_.is_unit(omega_)) throw std::invalid_argument("RkRing: omega must be a unit of R");
  if (!pow_within(R_.field().p(), k_, std::uint64_t{1} << 20))
    throw std::invalid_argument("RkRing: p^k too large");
  pk_ = checked_pow(R_.field().p(), k_);
  unit_1_wu_ = R_.add(R_.one(), R_.mul(omega_, R_.u()));

  const std::size_t D = dim();
  v1_fwd_.assign(D, linalg::Row(D, 0));
  RkElem acc = one();
  const RkElem vm1 = v_minus_1();
  for (std::size_t s = 0; s < D; ++s) {
    v1_fwd_[s] = flatten(acc);
    acc = mul(acc, vm1);
  }
  v1_inv_ = linalg::inverse(R_.field(), v1_fwd_);  // throws if the powers degenerate
}

void RkRing::check(const RkElem& a) const {
  if (a.c.size() != pk_) throw std::invalid_argument("RkRing: element has wrong v-degree bound");
  for (const auto& x : a.c)
    if (x.c.size() != R_.e()) throw std::invalid_argument("RkRing: element has wrong u-length");
}

RkElem RkRing::zero() const { return RkElem{std::vector<RElem>(pk_, R_.zero())}; }

RkElem RkRing::one() const {
  RkElem r = zero();
  r.c[0] = R_.one();
  return r;
}

RkElem RkRing::v() const {
  RkElem r = zero();
  if (pk_ > 1)
    r.c[1] = R_.one();
  else
    r.c[0] = unit_1_wu_;  // v^{p^k} = v here, so v is 1 + omega*u
  return r;
}

RkElem RkRing::from_base(const RElem& a) const {
  RkElem r = zero();
  r.c[0] = a;
  return r;
}

RkElem RkRing::v_minus_1() const { return sub(v(), one()); }

RkElem RkRing::add(const RkElem& a, const RkElem& b) const {
  check(a);
  check(b);
  RkElem r = zero();
  for (std::size_t i = 0; i < pk_; ++i) r.c[i] = R_.add(a.c[i], b.c[i]);
  return r;
}

RkElem RkRing::neg(const RkElem& a) const {
  check(a);
  RkElem r = zero();
  for (std::size_t i = 0; i < pk_; ++i) r.c[i] = R_.neg(a.c[i]);
  return r;
}

RkElem RkRing::sub(const RkElem& a, const RkElem& b) const { return add(a, neg(b)); }

RkElem RkRing::mul(const RkElem& a, const RkElem& b) const {
  check(a);
  check(b);
  std::vector<RElem> t(2 * pk_ - 1, R_.zero());
  for (std::size_t i = 0; i < pk_; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < pk_; ++j)
      t[i + j] = R_.add(t[i + j], R_.mul(a.c[i], b.c[j]));
  }
  // fold v^{p^k + i} = (1 + omega*u) v^i
  RkElem r = zero();
  for (std::size_t i = 0; i < pk_; ++i) r.c[i] = t[i];
  for (std::size_t i = pk_; i < t.size(); ++i)
    r.c[i - pk_] = R_.add(r.c[i - pk_], R_.mul(unit_1_wu_, t[i]));
  return r;
}

RkElem RkRing::pow(RkElem a, std::uint64_t n) const {
  RkElem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

linalg::Row RkRing::flatten(const RkElem& a) const {
  check(a);
  linalg::Row r(dim());
  for (std::size_t j = 0; j < pk_; ++j)
    for (std::uint32_t i = 0; i < R_.e(); ++i) r[j * R_.e() + i] = a.c[j].c[i];
  return r;
}

RkElem RkRing::unflatten(const linalg::Row& row) const {
  if (row.size() != dim()) throw std::invalid_argument("RkRing::unflatten: wrong length");
  RkElem a = zero();
  for (std::size_t j = 0; j < pk_; ++j)
    for (std::uint32_t i = 0; i < R_.e(); ++i) a.c[j].c[i] = row[j * R_.e() + i];
  return a;
}

std::vector<FqElem> RkRing::v1_expansion(const RkElem& a) const {
  const linalg::Row mono = flatten(a);
  const std::size_t D = dim();
  std::vector<FqElem> out(D, 0);
  const FieldCtx& F = R_.field();
  for (std::size_t s = 0; s < D; ++s) {
    FqElem acc = 0;
    for (std::size_t j = 0; j < D; ++j) acc = F.add(acc, F.mul(mono[j], v1_inv_[j][s]));
    out[s] = acc;
  }
  return out;
}

RkElem RkRing::from_v1(const std::vector<FqElem>& a) const {
  const std::size_t D = dim();
  if (a.size() != D) throw std::invalid_argument("RkRing::from_v1: wrong length");
  linalg::Row mono(D, 0);
  const FieldCtx& F = R_.field();
  for (std::size_t j = 0; j < D; ++j) {
    FqElem acc = 0;
    for (std::size_t s = 0; s < D; ++s) acc = F.add(acc, F.mul(a[s], v1_fwd_[s][j]));
    mono[j] = acc;
  }
  return unflatten(mono);
}

FqElem RkRing::tau(const RkElem& a) const {
  const linalg::Row mono = flatten(a);
  const FieldCtx& F = R_.field();
  FqElem acc = 0;
  for (std::size_t j = 0; j < dim(); ++j) acc = F.add(acc, F.mul(mono[j], v1_inv_[j][0]));
  return acc;
}

std::uint32_t RkRing::nilpotency_index() const {
  const RkElem vm1 = v_minus_1();
  RkElem acc = vm1;
  std::uint32_t t = 1;
  const std::uint32_t cap = static_cast<std::uint32_t>(dim()) + 1;
  while (!acc.is_zero()) {
    acc = mul(acc, vm1);
    if (++t > cap) throw std::logic_error("RkRing: v-1 failed to nilpotate within the dimension");
  }
  return t;
}

}  // namespace ccring
