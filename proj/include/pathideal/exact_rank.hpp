#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pathideal {

/// Sparse integer row: (column, value) pairs, strictly increasing columns,
/// no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Rank over Q of the matrix whose rows are `rows`.
///
/// Fraction-free echelon insertion: each incoming row is cleared against the
/// stored pivot rows by integer cross-multiplication and then divided by the
/// gcd of its entries. Runs in checked 64-bit arithmetic and restarts in
/// arbitrary precision if an intermediate value would overflow.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

/// Dense Bareiss elimination in arbitrary precision. Quadratic memory; meant
/// for small matrices and as an independent check of exact_rank.
std::size_t bareiss_rank(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace pathideal
