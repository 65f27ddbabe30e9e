#include "ccring/codes.hpp"

#include <algorithm>

namespace ccring {

linalg::Row CodeSpace::flat_from_word(const RWord& w) const {
  if (w.size() != length_) throw std::invalid_argument("CodeSpace: word length mismatch");
  const std::uint32_t e = ring_.e();
  linalg::Row r(length_ * e);
  for (std::size_t i = 0; i < length_; ++i) {
    if (w[i].c.size() != e) throw std::invalid_argument("CodeSpace: element length mismatch");
    for (std::uint32_t s = 0; s < e; ++s) r[i * e + s] = w[i].c[s];
  }
  return r;
}

RWord CodeSpace::word_from_flat(const linalg::Row& r) const {
  const std::uint32_t e = ring_.e();
  if (r.size() != length_ * e) throw std::invalid_argument("CodeSpace: flat length mismatch");
  RWord w(length_, ring_.zero());
  for (std::size_t i = 0; i < length_; ++i)
    for (std::uint32_t s = 0; s < e; ++s) w[i].c[s] = r[i * e + s];
  return w;
}

void CodeSpace::assert_u_closed() const {
  for (const auto& row : basis_) {
    RWord w = word_from_flat(row);
    for (auto& x : w) x = ring_.mul(x, ring_.u());
    if (!contains(w)) throw VerificationError("CodeSpace: row space is not closed under u");
  }
}

CodeSpace CodeSpace::span(const ChainRing& ring, std::size_t length,
                          const std::vector<RWord>& gens) {
  CodeSpace cs(ring, length);
  linalg::Matrix rows;
  rows.reserve(gens.size() * ring.e());
  for (const auto& g : gens) {
    if (g.size() != length) throw std::invalid_argument("span: word length mismatch");
    RWord w = g;
    for (std::uint32_t j = 0; j < ring.e(); ++j) {
      rows.push_back(cs.flat_from_word(w));
      if (j + 1 < ring.e())
        for (auto& x : w) x = ring.mul(x, ring.u());
    }
  }
  cs.pivots_ = linalg::rref(ring.field(), rows);
  cs.basis_ = std::move(rows);
  cs.assert_u_closed();
  return cs;
}

CodeSpace CodeSpace::from_fq_rows(const ChainRing& ring, std::size_t length, linalg::Matrix rows) {
  CodeSpace cs(ring, length);
  for (const auto& r : rows)
    if (r.size() != length * ring.e()) throw std::invalid_argument("from_fq_rows: row length mismatch");
  cs.pivots_ = linalg::rref(ring.field(), rows);
  cs.basis_ = std::move(rows);
  cs.assert_u_closed();
  return cs;
}

bool CodeSpace::contains(const RWord& w) const { return contains_flat(flat_from_word(w)); }

bool CodeSpace::contains_flat(linalg::Row row) const {
  if (row.size() != length_ * ring_.e())
    throw std::invalid_argument("CodeSpace: flat length mismatch");
  return linalg::rowspace_contains(ring_.field(), basis_, pivots_, std::move(row));
}

std::uint64_t CodeSpace::min_distance(std::uint64_t threshold) const {
  if (is_zero()) throw std::invalid_argument("min_distance: undefined for the zero code");
  return linalg::min_weight_enumerate(ring_.field(), basis_, ring_.e(), threshold);
}

RWord CodeSpace::min_weight_word(std::uint64_t threshold) const {
  if (is_zero()) throw std::invalid_argument("min_weight_word: undefined for the zero code");
  linalg::Row witness;
  linalg::min_weight_enumerate(ring_.field(), basis_, ring_.e(), threshold, &witness);
  return word_from_flat(witness);
}

// ------------------------------------------------------------------ towers

void validate_tower(const FieldCtx& F, const CyclicTower& T, std::uint32_t e) {
  if (T.g.size() != e) throw std::invalid_argument("tower: expected e generators");
  const FqPoly xn1 = poly_xn_minus(F, T.n, 1);
  for (const auto& g : T.g) {
    if (!poly_is_monic(g)) throw std::invalid_argument("tower: generators must be monic");
    if (!poly_divides(F, g, xn1))
      throw std::invalid_argument("tower: generator does not divide x^n - 1");
  }
  for (std::size_t s = 0; s + 1 < T.g.size(); ++s)
    if (!poly_divides(F, T.g[s + 1], T.g[s]))
      throw std::invalid_argument("tower: divisibility chain g_{s+1} | g_s violated");
}

CodeSpace cyclic_from_tower(const ChainRing& ring, const CyclicTower& T) {
  const FieldCtx& F = ring.field();
  validate_tower(F, T, ring.e());
  const std::size_t n = T.n;

  // sum_s u^s g_s(x) reduced mod x^n - 1 (the sentinel folds to zero)
  RWord gen(n, ring.zero());
  for (std::uint32_t s = 0; s < ring.e(); ++s)
    for (std::size_t i = 0; i < T.g[s].c.size(); ++i)
      gen[i % n].c[s] = F.add(gen[i % n].c[s], T.g[s].c[i]);

  std::vector<RWord> gens;
  gens.reserve(n);
  RWord w = gen;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(w);
    w = word_shift(ring, w, ring.one());
  }
  CodeSpace cs = CodeSpace::span(ring, n, gens);

  std::uint64_t expect = 0;
  for (const auto& g : T.g) expect += n - static_cast<std::uint64_t>(g.deg());
  expect *= F.m();
  if (cs.log_size() != expect)
    throw VerificationError("cyclic_from_tower: size does not match the tower degrees");
  return cs;
}

RWord word_shift(const ChainRing& ring, const RWord& w, const RElem& gamma) {
  RWord r(w.size(), ring.zero());
  if (w.empty()) return r;
  r[0] = ring.mul(gamma, w.back());
  for (std::size_t i = 1; i < w.size(); ++i) r[i] = w[i - 1];
  return r;
}

std::uint64_t word_weight(const RWord& w) {
  std::uint64_t n = 0;
  for (const auto& x : w)
    if (!x.is_zero()) ++n;
  return n;
}

FqPoly torsion(const CodeSpace& C, std::uint32_t s) {
  const ChainRing& ring = C.ring();
  const FieldCtx& F = ring.field();
  const std::uint32_t e = ring.e();
  const std::size_t n = C.length();
  if (s >= e) throw std::invalid_argument("torsion: layer out of range");

  // the code must be an ideal (closed under the cyclic shift)
  for (const auto& row : C.basis()) {
    RWord w = C.word_from_flat(row);
    if (!C.contains(word_shift(ring, w, ring.one())))
      throw std::invalid_argument("torsion: code is not shift-closed");
  }

  const FqPoly sentinel = poly_xn_minus(F, n, 1);
  if (C.is_zero()) return sentinel;

  // Reorder columns so the layers < s come first, reduce, and keep the rows
  // supported on layers >= s; their layer-s slice spans Tor_s.
  std::vector<std::size_t> order;
  order.reserve(n * e);
  for (std::uint32_t t = 0; t < s; ++t)
    for (std::size_t i = 0; i < n; ++i) order.push_back(i * e + t);
  const std::size_t low = order.size();
  for (std::uint32_t t = s; t < e; ++t)
    for (std::size_t i = 0; i < n; ++i) order.push_back(i * e + t);

  linalg::Matrix perm;
  perm.reserve(C.basis().size());
  for (const auto& row : C.basis()) {
    linalg::Row r(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) r[j] = row[order[j]];
    perm.push_back(std::move(r));
  }
  const auto pivots = linalg::rref(F, perm);

  linalg::Matrix slice;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (pivots[i] < low) continue;  // row touches a layer below s
    linalg::Row r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = perm[i][low + j];
    slice.push_back(std::move(r));
  }
  if (slice.empty()) return sentinel;
  const std::size_t dim = linalg::rank(F, slice);

  FqPoly g = sentinel;
  for (const auto& row : slice) {
    FqPoly prow;
    prow.c = row;
    g = poly_gcd(F, g, poly_trim(std::move(prow)));
  }
  if (static_cast<std::uint64_t>(g.deg()) != n - dim)
    throw VerificationError("torsion: generator degree does not match the slice rank");
  return g;
}

// ----------------------------------------------------------- matrix product

CodeSpace matrix_product(const std::vector<CodeSpace>& codes, const ProductMatrix& A) {
  if (codes.empty()) throw std::invalid_argument("matrix_product: no constituent codes");
  if (codes.size() != A.alpha) throw std::invalid_argument("matrix_product: row count mismatch");
  if (A.alpha > A.beta) throw std::invalid_argument("matrix_product: alpha must be <= beta");
  const ChainRing& ring = codes[0].ring();
  const FieldCtx& F = ring.field();
  const std::size_t n = codes[0].length();
  for (const auto& c : codes) {
    if (c.length() != n) throw std::invalid_argument("matrix_product: length mismatch");
    if (!(c.ring() == ring)) throw std::invalid_argument("matrix_product: ring mismatch");
  }
  for (auto x : A.a)
    if (x >= F.q()) throw std::invalid_argument("matrix_product: entry outside F_q");

  const std::uint32_t e = ring.e();
  linalg::Matrix rows;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (const auto& brow : codes[i].basis()) {
      // image of (0,..,c_i,..,0)*A, flattened column-major
      linalg::Row out(n * A.beta * e, 0);
      for (std::size_t j = 0; j < A.beta; ++j) {
        const FqElem f = A.at(i, j);
        if (f == 0) continue;
        for (std::size_t t = 0; t < n * e; ++t)
          out[j * n * e + t] = F.add(out[j * n * e + t], F.mul(f, brow[t]));
      }
      rows.push_back(std::move(out));
    }
  }
  CodeSpace mp = CodeSpace::from_fq_rows(ring, n * A.beta, std::move(rows));

  if (is_frr(F, A)) {
    std::uint64_t total = 0;
    for (const auto& c : codes) total += c.log_size();
    if (mp.log_size() != total)
      throw VerificationError("matrix_product: FRR size identity violated");
  }
  return mp;
}

bool is_frr(const FieldCtx& F, const ProductMatrix& A) {
  linalg::Matrix rows(A.alpha, linalg::Row(A.beta));
  for (std::size_t i = 0; i < A.alpha; ++i)
    for (std::size_t j = 0; j < A.beta; ++j) rows[i][j] = A.at(i, j);
  return linalg::rank(F, rows) == A.alpha;
}

namespace {

bool nsc_minors(const FieldCtx& F, const ProductMatrix& A, std::size_t t,
                std::vector<std::size_t>& cols, std::size_t next) {
  if (cols.size() == t) {
    linalg::Matrix sub(t, linalg::Row(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) sub[i][j] = A.at(i, cols[j]);
    return linalg::det(F, sub) != 0;
  }
  for (std::size_t c = next; c + (t - cols.size()) <= A.beta; ++c) {
    cols.push_back(c);
    const bool ok = nsc_minors(F, A, t, cols, c + 1);
    cols.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_nsc(const FieldCtx& F, const ProductMatrix& A) {
  if (A.alpha > A.beta) throw std::invalid_argument("is_nsc: alpha must be <= beta");
  for (std::size_t t = 1; t <= A.alpha; ++t) {
    std::vector<std::size_t> cols;
    if (!nsc_minors(F, A, t, cols, 0)) return false;
  }
  return true;
}

std::uint64_t fq_code_min_distance(const FieldCtx& F, linalg::Matrix rows,
                                   std::uint64_t threshold) {
  linalg::rref(F, rows);
  if (rows.empty()) throw std::invalid_argument("fq_code_min_distance: zero code");
  return linalg::min_weight_enumerate(F, rows, 1, threshold);
}

std::uint64_t mp_distance(const FieldCtx& F, const std::vector<std::uint64_t>& d,
                          const ProductMatrix& A, std::uint64_t threshold) {
  if (d.size() != A.alpha) throw std::invalid_argument("mp_distance: need one d_i per row");
  std::uint64_t best = ~std::uint64_t{0};
  for (std::size_t i = 1; i <= A.alpha; ++i) {
    linalg::Matrix rows(i, linalg::Row(A.beta));
    for (std::size_t r = 0; r < i; ++r)
      for (std::size_t j = 0; j < A.beta; ++j) rows[r][j] = A.at(r, j);
    linalg::rref(F, rows);
    if (rows.empty())
      throw std::invalid_argument("mp_distance: zero row prefix, delta undefined");
    const std::uint64_t delta = linalg::min_weight_enumerate(F, rows, 1, threshold);
    best = std::min(best, delta * d[i - 1]);
  }
  return best;
}

}  // namespace ccring
