#include "ccring/linalg.hpp"

#include <algorithm>

namespace ccring::linalg {

std::vector<std::size_t> rref(const FieldCtx& F, Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const FqElem inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const FqElem f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(const FieldCtx& F, Matrix rows) { return rref(F, rows).size(); }

Row reduce_against(const FieldCtx& F, const Matrix& basis, const std::vector<std::size_t>& pivots,
                   Row w) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const FqElem f = w[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(f, basis[i][j]));
  }
  return w;
}

bool rowspace_contains(const FieldCtx& F, const Matrix& basis, const std::vector<std::size_t>& pivots,
                       Row w) {
  w = reduce_against(F, basis, pivots, std::move(w));
  return std::all_of(w.begin(), w.end(), [](FqElem x) { return x == 0; });
}

bool rowspace_equal(const FieldCtx& F, Matrix a, Matrix b) {
  rref(F, a);
  rref(F, b);
  return a == b;
}

Matrix mat_mul(const FieldCtx& F, const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix r(n, Row(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const FqElem f = a[i][t];
      if (f == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = F.add(r[i][j], F.mul(f, b[t][j]));
    }
  return r;
}

Matrix inverse(const FieldCtx& F, const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n, Row(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(F, aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i)
      throw VerificationError("inverse: matrix is singular");
  Matrix inv(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    std::copy(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end(), inv[i].begin());
  return inv;
}

FqElem det(const FieldCtx& F, Matrix a) {
  const std::size_t n = a.size();
  FqElem d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[sel], a[c]);
      d = F.neg(d);
    }
    d = F.mul(d, a[c][c]);
    const FqElem inv = F.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const FqElem f = F.mul(a[i][c], inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[c][j]));
    }
  }
  return d;
}

Matrix left_nullspace(const FieldCtx& F, const Matrix& a) {
  const std::size_t n = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  // augment with the identity and eliminate on the original columns only
  Matrix aug(n, Row(cols + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t sel = r;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(aug[r], aug[sel]);
    const FqElem inv = F.inv(aug[r][c]);
    for (auto& x : aug[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const FqElem f = aug[i][c];
      for (std::size_t j = 0; j < cols + n; ++j)
        aug[i][j] = F.sub(aug[i][j], F.mul(f, aug[r][j]));
    }
    ++r;
  }
  Matrix null;
  for (std::size_t i = r; i < n; ++i)
    null.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(cols), aug[i].end());
  rref(F, null);
  return null;
}

std::uint64_t min_weight_enumerate(const FieldCtx& F, const Matrix& rows, std::size_t block,
                                   std::uint64_t threshold, Row* witness) {
  if (rows.empty()) throw std::invalid_argument("min_weight_enumerate: zero code");
  if (!pow_within(F.q(), rows.size(), threshold))
    throw ThresholdExceeded("min_weight_enumerate: codeword count over threshold");
  const std::size_t cols = rows[0].size();
  if (block == 0 || cols % block != 0)
    throw std::invalid_argument("min_weight_enumerate: bad block size");

  Row cur(cols, 0);
  std::vector<std::uint64_t> digit(rows.size(), 0);
  std::uint64_t best = cols + 1;
  // Base-q odometer: every digit step (including rollover) adds its row once,
  // since q*row vanishes in characteristic p.
  for (;;) {
    std::size_t i = 0;
    for (; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) cur[j] = F.add(cur[j], rows[i][j]);
      if (++digit[i] == F.q())
        digit[i] = 0;
      else
        break;
    }
    if (i == rows.size()) break;  // wrapped to zero: enumeration complete
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < cols; j += block) {
      for (std::size_t t = 0; t < block; ++t) {
        if (cur[j + t] != 0) {
          ++w;
          break;
        }
      }
    }
    if (w < best) {
      best = w;
      if (witness) *witness = cur;
    }
  }
  return best;
}

}  // namespace ccring::linalg
