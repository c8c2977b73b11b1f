#pragma once

#include "quasisym/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace quasisym {

/// Sparse row: (column, value) pairs, no duplicate columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Rank over Q by fraction-exact Gaussian elimination. Rows may have
/// different lengths; missing trailing entries are zero.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// Rank over Q of sparse rows. Rows are first split into groups that share
/// no column (the matrix is block diagonal up to permutation), and each block
/// is eliminated on its own.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

} // namespace quasisym
