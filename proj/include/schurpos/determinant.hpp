#pragma once

#include "schurpos/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace schurpos {

// Exact determinant of a square rational matrix by Gaussian elimination.
// The matrices in this library have order <= ~10, so O(n^3) field
// arithmetic is the whole story. A 0x0 matrix has determinant 1.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  }

  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace schurpos
