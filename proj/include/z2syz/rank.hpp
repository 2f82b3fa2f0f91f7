#pragma once

// Rank over the fraction field by fraction-free (Bareiss) elimination.
// Every division below is exact: after step k the active entries are
// (k+1)-minors of the input, divided by the previous pivot minor.

#include <cstddef>
#include <utility>
#include <vector>

#include "z2syz/module.hpp"

namespace z2syz {

inline std::size_t generic_rank(const ModuleMap& f) {
  auto a = f.to_rows();
  const std::size_t rows = a.size();
  const std::size_t cols = f.cols();
  if (rows == 0 || cols == 0) return 0;
  Polynomial prev = Polynomial::one(f.target().ring());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    // Sparsest nonzero pivot in this column keeps intermediate growth down.
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (!a[i][c].is_zero() && (piv == rows || a[i][c].size() < a[piv][c].size())) piv = i;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Polynomial& p = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial v = p * a[i][j] + a[i][c] * a[rank][j];
        a[i][j] = divide_exact(v, prev);
      }
      a[i][c] = Polynomial::zero(f.target().ring());
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace z2syz
