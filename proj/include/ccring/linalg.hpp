#pragma once

// Dense exact linear algebra over F_{p^m}. Everything works on row vectors.

#include <cstdint>
#include <vector>

#include "ccring/common.hpp"
#include "ccring/fq.hpp"

namespace ccring::linalg {

using Row = std::vector<FqElem>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form; returns the pivot columns. Zero rows
// are dropped, so rows.size() == rank afterwards.
std::vector<std::size_t> rref(const FieldCtx& F, Matrix& rows);

std::size_t rank(const FieldCtx& F, Matrix rows);

// Reduce w against an RREF basis; returns the residual.
Row reduce_against(const FieldCtx& F, const Matrix& basis, const std::vector<std::size_t>& pivots,
                   Row w);

bool rowspace_contains(const FieldCtx& F, const Matrix& basis, const std::vector<std::size_t>& pivots,
                       Row w);

bool rowspace_equal(const FieldCtx& F, Matrix a, Matrix b);

Matrix mat_mul(const FieldCtx& F, const Matrix& a, const Matrix& b);

// Inverse of a square matrix; throws VerificationError when singular.
Matrix inverse(const FieldCtx& F, const Matrix& a);

FqElem det(const FieldCtx& F, Matrix a);

// Basis (RREF) of {y : y*a = 0}.
Matrix left_nullspace(const FieldCtx& F, const Matrix& a);

// Exact minimum weight over the nonzero span of `rows`, which must be
// F_q-linearly independent. Coordinates are grouped in consecutive blocks of
// `block` entries; a position counts as nonzero when any entry of its block
// is. Enumerates q^rows.size() - 1 vectors (base-q odometer, one row
// addition per step); throws ThresholdExceeded when that exceeds the budget.
// When `witness` is non-null it receives one minimizing vector.
std::uint64_t min_weight_enumerate(const FieldCtx& F, const Matrix& rows, std::size_t block,
                                   std::uint64_t threshold, Row* witness = nullptr);

}  // namespace ccring::linalg
