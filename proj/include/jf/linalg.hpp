/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over a field (Q or GQ).
 */
#pragma once

#include "jf/jordan.hpp"

#include <utility>

namespace jf {

namespace detail {
inline bool field_zero(const Q& q) { return sgn(q) == 0; }
inline bool field_zero(const GQ& g) { return g.is_zero(); }
}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!detail::field_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    F inv = F(1) / m[row][c];
    for (int j = c; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || detail::field_zero(m[i][c])) continue;
      F f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
int exact_rank(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the right null space of an rows x cols matrix.
template <class F>
std::vector<Vec<F>> nullspace(Mat<F> m, int cols) {
  std::vector<Vec<F>> basis;
  if (m.empty()) {
    for (int c = 0; c < cols; ++c) {
      Vec<F> v(cols, F(0));
      v[c] = F(1);
      basis.push_back(v);
    }
    return basis;
  }
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F(0) - m[r][f];
    basis.push_back(v);
  }
  return basis;
}

/// Solves m x = b exactly; throws std::domain_error if inconsistent.
template <class F>
Vec<F> solve_exact(Mat<F> m, const Vec<F>& b) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> piv = rref(m);
  Vec<F> x(cols, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) throw std::domain_error("solve_exact: inconsistent system");
    x[piv[r]] = m[r][cols];
  }
  return x;
}

}  // namespace jf
