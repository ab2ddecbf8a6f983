#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sympow/field.hpp"

namespace sympow {

/// Dense matrix over an exact field, row-major.
template <CoefficientField F>
using DenseMatrix = std::vector<std::vector<F>>;

/// Gauss-Jordan elimination in place. On return the first `rank` rows are in
/// reduced row echelon form (pivots equal one, pivot columns otherwise zero)
/// and the remaining rows are dropped. Returns the pivot columns.
template <CoefficientField F>
std::vector<std::size_t> reduce_to_echelon(DenseMatrix<F>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const F inv = rows[rank][col].inverse();
    for (std::size_t c = col; c < columns; ++c) rows[rank][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const F factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace sympow
