#ifndef ISOJAC_LINALG_HPP
#define ISOJAC_LINALG_HPP

// Gaussian elimination over an exact field. The scalar type needs the usual
// ring operators plus ADL-visible is_zero(x) and inverse(x).

#include "isojac/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace isojac::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves A x = b. Returns nullopt when the system is inconsistent; throws
/// nothing on rank deficiency but sets `unique` to false (free variables are 0).
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> a, std::vector<T> b, const T& zero, bool* unique = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    T inv = inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  if (unique) *unique = (r == cols);
  std::vector<T> x(cols, zero);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

template <class T>
T determinant(Matrix<T> a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  T det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return zero;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = zero - det;
    }
    det = det * a[c][c];
    T inv = inverse(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      T f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

}  // namespace isojac::linalg

#endif  // ISOJAC_LINALG_HPP
