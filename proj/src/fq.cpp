#include "ccring/fq.hpp"

#include <algorithm>
#include <sstream>

#include "ccring/linalg.hpp"

namespace ccring {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

// ---- helpers over the prime field, used before a FieldCtx exists ----

using PPoly = std::vector<u64>;  // coefficients mod p, low degree first

PPoly ptrim(PPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// remainder of a mod b, b monic-normalized internally
PPoly pmod(PPoly a, PPoly b, u64 p) {
  b = ptrim(std::move(b));
  a = ptrim(std::move(a));
  const u64 lead = b.back();
  if (lead != 1) {
    // make b monic: scale by lead^-1 = lead^(p-2)
    u64 inv = 1, base = lead, e = p - 2;
    while (e) {
      if (e & 1) inv = mod_mul(inv, base, p);
      base = mod_mul(base, base, p);
      e >>= 1;
    }
    for (auto& c : b) c = mod_mul(c, inv, p);
  }
  while (a.size() >= b.size()) {
    const u64 f = a.back();
    if (f != 0) {
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        u64 t = mod_mul(f, b[i], p);
        a[off + i] = (a[off + i] + p - t) % p;
      }
    }
    a.pop_back();
    a = ptrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

// Trial division by every monic polynomial of degree <= deg(f)/2 over F_p.
bool p_irreducible_trial(const PPoly& f, u64 p) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  for (std::size_t dd = 1; dd <= d / 2; ++dd) {
    if (!pow_within(p, dd, u64{1} << 26))
      throw std::invalid_argument("modulus check: trial division space too large");
    const u64 count = checked_pow(p, dd);
    PPoly div(dd + 1, 0);
    div[dd] = 1;
    for (u64 code = 0; code < count; ++code) {
      u64 c = code;
      for (std::size_t i = 0; i < dd; ++i) {
        div[i] = c % p;
        c /= p;
      }
      if (pmod(f, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(u64 p, std::uint32_t m, std::vector<u64> modulus) : p_(p), m_(m) {
  if (!is_prime_u64(p)) throw std::invalid_argument("FieldCtx: p must be prime");
  if (m == 0) throw std::invalid_argument("FieldCtx: m must be positive");
  if (!pow_within(p, m, u64{1} << 40)) throw std::invalid_argument("FieldCtx: p^m too large");
  q_ = checked_pow(p, m);

  if (m == 1) {
    if (!modulus.empty()) throw std::invalid_argument("FieldCtx: prime field takes no modulus");
    return;
  }

  if (!modulus.empty()) {
    for (auto c : modulus)
      if (c >= p) throw std::invalid_argument("FieldCtx: modulus coefficient out of range");
    modulus = ptrim(std::move(modulus));
    if (modulus.size() != m + 1 || modulus.back() != 1)
      throw std::invalid_argument("FieldCtx: modulus must be monic of degree m");
    if (!p_irreducible_trial(modulus, p))
      throw std::invalid_argument("FieldCtx: modulus is reducible over F_p");
    mod_ = std::move(modulus);
    return;
  }

  // Lexicographically smallest monic irreducible of degree m.
  PPoly cand(m + 1, 0);
  cand[m] = 1;
  for (u64 code = 0; code < q_; ++code) {
    u64 c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = c % p;
      c /= p;
    }
    if (p_irreducible_trial(cand, p)) {
      mod_ = cand;
      return;
    }
  }
  throw std::logic_error("FieldCtx: no irreducible polynomial found");  // unreachable
}

std::vector<u64> FieldCtx::digits(FqElem a) const {
  std::vector<u64> d(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqElem FieldCtx::from_digits(const std::vector<u64>& d) const {
  if (d.size() != m_) throw std::invalid_argument("from_digits: wrong length");
  FqElem a = 0;
  for (std::uint32_t i = m_; i-- > 0;) {
    if (d[i] >= p_) throw std::invalid_argument("from_digits: digit out of range");
    a = a * p_ + d[i];
  }
  return a;
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
  if (m_ == 1) return (a + b) % p_;
  FqElem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

FqElem FieldCtx::neg(FqElem a) const {
  if (m_ == 1) return (p_ - a % p_) % p_;
  FqElem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
  if (m_ == 1) return mod_mul(a, b, p_);
  std::vector<u64> da = digits(a), db = digits(b);
  std::vector<u64> t(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      t[i + j] = (t[i + j] + mod_mul(da[i], db[j], p_)) % p_;
  }
  // reduce modulo the defining polynomial (monic)
  for (std::size_t d = t.size(); d-- > m_;) {
    const u64 c = t[d];
    if (c == 0) continue;
    t[d] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      u64 s = mod_mul(c, mod_[i], p_);
      t[d - m_ + i] = (t[d - m_ + i] + p_ - s) % p_;
    }
  }
  t.resize(m_);
  return from_digits(t);
}

FqElem FieldCtx::pow(FqElem a, u64 e) const {
  FqElem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a == 0) throw std::invalid_argument("FieldCtx::inv: zero has no inverse");
  return pow(a, q_ - 2);
}

// ---------------------------------------------------------------- FqPoly

FqPoly poly_trim(FqPoly a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  return a;
}

FqPoly poly_one() { return FqPoly{{1}}; }
FqPoly poly_x() { return FqPoly{{0, 1}}; }

FqPoly poly_xn_minus(const FieldCtx& F, u64 n, FqElem gamma) {
  FqPoly r;
  r.c.assign(n + 1, 0);
  r.c[0] = F.neg(gamma);
  r.c[n] = 1;
  return r;
}

FqPoly poly_add(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    FqElem x = i < a.c.size() ? a.c[i] : 0;
    FqElem y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(x, y);
  }
  return poly_trim(std::move(r));
}

FqPoly poly_neg(const FieldCtx& F, const FqPoly& a) {
  FqPoly r = a;
  for (auto& c : r.c) c = F.neg(c);
  return r;
}

FqPoly poly_sub(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
  return poly_add(F, a, poly_neg(F, b));
}

FqPoly poly_mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FqPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return r;
}

FqPoly poly_scale(const FieldCtx& F, const FqPoly& a, FqElem s) {
  if (s == 0) return {};
  FqPoly r = a;
  for (auto& c : r.c) c = F.mul(c, s);
  return r;
}

FqPoly poly_shift(const FqPoly& a, u64 k) {
  if (a.is_zero()) return {};
  FqPoly r;
  r.c.assign(a.c.size() + k, 0);
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

FqPoly poly_pow(const FieldCtx& F, const FqPoly& a, u64 e) {
  FqPoly r = poly_one(), base = a;
  while (e) {
    if (e & 1) r = poly_mul(F, r, base);
    base = poly_mul(F, base, base);
    e >>= 1;
  }
  return r;
}

bool poly_is_monic(const FqPoly& a) { return !a.is_zero() && a.c.back() == 1; }

FqPoly poly_make_monic(const FieldCtx& F, const FqPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.c.back()));
}

std::pair<FqPoly, FqPoly> poly_divmod(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  FqPoly rem = poly_trim(a), quot;
  if (rem.c.size() < b.c.size()) return {quot, rem};
  quot.c.assign(rem.c.size() - b.c.size() + 1, 0);
  const FqElem lead_inv = F.inv(b.c.back());
  while (rem.c.size() >= b.c.size()) {
    const FqElem f = F.mul(rem.c.back(), lead_inv);
    const std::size_t off = rem.c.size() - b.c.size();
    quot.c[off] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[off + i] = F.sub(rem.c[off + i], F.mul(f, b.c[i]));
    rem = poly_trim(std::move(rem));  // the leading term cancels exactly
    if (rem.c.empty()) break;
  }
  return {poly_trim(std::move(quot)), rem};
}

bool poly_divides(const FieldCtx& F, const FqPoly& d, const FqPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_divmod(F, a, d).second.is_zero();
}

FqPoly poly_mod(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
  return poly_divmod(F, a, b).second;
}

FqPoly poly_gcd(const FieldCtx& F, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, a);
}

FqPoly poly_powmod(const FieldCtx& F, FqPoly base, u64 e, const FqPoly& mod) {
  FqPoly r = poly_mod(F, poly_one(), mod);
  base = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

bool poly_is_irreducible(const FieldCtx& F, const FqPoly& f) {
  const std::int64_t d = f.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  // x^(q^i) mod f, i = 1..d/2: a nontrivial gcd with x^(q^i) - x exposes a
  // factor of degree dividing i.
  FqPoly t = poly_powmod(F, poly_x(), F.q(), f);
  for (std::int64_t i = 1; i <= d / 2; ++i) {
    FqPoly g = poly_gcd(F, poly_sub(F, t, poly_x()), f);
    if (g.deg() > 0) return false;
    if (i < d / 2) t = poly_powmod(F, t, F.q(), f);
  }
  return true;
}

bool poly_canonical_less(const FqPoly& a, const FqPoly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

std::string poly_to_string(const FqPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) os << ',';
    os << a.c[i];
  }
  return os.str();
}

FqPoly poly_parse(const FieldCtx& F, const std::string& text) {
  FqPoly r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const u64 v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("poly_parse: bad coefficient '" + item + "'");
    if (v >= F.q()) throw std::invalid_argument("poly_parse: coefficient out of range");
    r.c.push_back(v);
  }
  if (r.c.empty()) throw std::invalid_argument("poly_parse: empty polynomial text");
  return poly_trim(std::move(r));
}

// ------------------------------------------------- factorization of x^n - 1

namespace {

// Elements of E = F_q[y]/<H> as coefficient vectors over F_q, low first.
using ExtElem = FqPoly;

ExtElem ext_mul(const FieldCtx& F, const FqPoly& H, const ExtElem& a, const ExtElem& b) {
  return poly_mod(F, poly_mul(F, a, b), H);
}

ExtElem ext_pow(const FieldCtx& F, const FqPoly& H, ExtElem a, u64 e) {
  ExtElem r = poly_one();
  while (e) {
    if (e & 1) r = ext_mul(F, H, r, a);
    a = ext_mul(F, H, a, a);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ExtElem ext_from_code(const FieldCtx& F, u64 code, std::uint32_t ord) {
  ExtElem e;
  for (std::uint32_t i = 0; i < ord; ++i) {
    e.c.push_back(code % F.q());
    code /= F.q();
  }
  return poly_trim(std::move(e));
}

}  // namespace

std::vector<FqPoly> factor_xn_minus_1(const FieldCtx& F, u64 n) {
  if (n == 0) throw std::invalid_argument("factor_xn_minus_1: n must be positive");
  if (n % F.p() == 0)
    throw std::invalid_argument("factor_xn_minus_1: p divides n (repeated divisors)");
  if (n == 1) return {FqPoly{{F.neg(1), 1}}};

  // multiplicative order of q mod n
  std::uint32_t ord = 1;
  {
    u64 acc = F.q() % n;
    while (acc != 1) {
      acc = acc * (F.q() % n) % n;
      ++ord;
    }
  }

  if (!pow_within(F.q(), ord, u64{1} << 62))
    throw std::invalid_argument("factor_xn_minus_1: splitting field too large");
  const u64 qE = checked_pow(F.q(), ord);

  // E = F_q[y]/<H>, H the lexicographically smallest monic irreducible of
  // degree ord over F_q.
  FqPoly H;
  {
    FqPoly cand;
    cand.c.assign(ord + 1, 0);
    cand.c[ord] = 1;
    bool found = false;
    for (u64 code = 0; code < qE && !found; ++code) {
      u64 c = code;
      for (std::uint32_t i = 0; i < ord; ++i) {
        cand.c[i] = c % F.q();
        c /= F.q();
      }
      if (poly_is_irreducible(F, cand)) {
        H = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("factor_xn_minus_1: no extension modulus found");
  }

  if ((qE - 1) % n != 0) throw std::logic_error("factor_xn_minus_1: order bookkeeping failed");
  const u64 cofactor = (qE - 1) / n;
  const std::vector<u64> pf = prime_factors(n);

  // Deterministic search for a primitive n-th root of unity in E.
  ExtElem zeta;
  {
    bool found = false;
    for (u64 code = 1; code < qE && !found; ++code) {
      ExtElem z = ext_pow(F, H, ext_from_code(F, code, ord), cofactor);
      if (z == poly_one()) continue;
      bool ok = ext_pow(F, H, z, n) == poly_one();
      for (u64 l : pf)
        if (ok && ext_pow(F, H, z, n / l) == poly_one()) ok = false;
      if (ok) {
        zeta = z;
        found = true;
      }
    }
    if (!found) throw std::logic_error("factor_xn_minus_1: no primitive root found");
  }

  std::vector<ExtElem> zpow(n);
  zpow[0] = poly_one();
  for (u64 i = 1; i < n; ++i) zpow[i] = ext_mul(F, H, zpow[i - 1], zeta);

  // q-cyclotomic cosets mod n -> minimal polynomials.
  std::vector<FqPoly> factors;
  std::vector<bool> seen(n, false);
  for (u64 start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<u64> coset;
    u64 j = start;
    do {
      seen[j] = true;
      coset.push_back(j);
      j = j * (F.q() % n) % n;
    } while (j != start);

    // f(Y) = prod_{i in coset} (Y - zeta^i), coefficients in E
    std::vector<ExtElem> f{poly_one()};
    for (u64 i : coset) {
      std::vector<ExtElem> nf(f.size() + 1);
      const ExtElem mroot = poly_neg(F, zpow[i]);
      for (std::size_t t = 0; t < f.size(); ++t) {
        nf[t + 1] = poly_add(F, nf[t + 1], f[t]);
        nf[t] = poly_add(F, nf[t], poly_mul(F, f[t], mroot));
      }
      for (auto& cf : nf) cf = poly_mod(F, cf, H);
      f = std::move(nf);
    }

    FqPoly proj;
    proj.c.reserve(f.size());
    for (auto& cf : f) {
      if (cf.deg() > 0)
        throw std::logic_error("factor_xn_minus_1: coefficient escaped the base field");
      proj.c.push_back(cf.is_zero() ? 0 : cf.c[0]);
    }
    factors.push_back(poly_trim(std::move(proj)));
  }

  std::sort(factors.begin(), factors.end(), poly_canonical_less);

  // Construction identity: the factors multiply back to x^n - 1.
  FqPoly prod = poly_one();
  for (const auto& f : factors) prod = poly_mul(F, prod, f);
  if (prod != poly_xn_minus(F, n, 1))
    throw std::logic_error("factor_xn_minus_1: factor product mismatch");
  return factors;
}

std::uint64_t fq_consta_min_distance(const FieldCtx& F, const FqPoly& g, u64 n, FqElem gamma,
                                     u64 threshold) {
  if (g.is_zero()) throw std::invalid_argument("fq_consta_min_distance: zero generator");
  const FqPoly gm = poly_make_monic(F, g);
  const FqPoly xn = poly_xn_minus(F, n, gamma);
  if (!poly_divides(F, gm, xn))
    throw std::invalid_argument("fq_consta_min_distance: g does not divide x^n - gamma");
  const u64 dim = n - static_cast<u64>(gm.deg());
  if (dim == 0) throw std::invalid_argument("fq_consta_min_distance: zero code has no distance");
  if (!pow_within(F.q(), dim, threshold))
    throw ThresholdExceeded("fq_consta_min_distance: enumeration over threshold");

  // rows x^i*g, i < dim, all of degree < n: the code is their span
  linalg::Matrix rows(dim, linalg::Row(n, 0));
  for (u64 i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < gm.c.size(); ++j) rows[i][i + j] = gm.c[j];
  return linalg::min_weight_enumerate(F, rows, 1, threshold);
}

}  // namespace ccring
