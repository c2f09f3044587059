#pragma once

// Dense Gauss-Jordan elimination over an exact field (Rational or an Ext tower).

#include <optional>
#include <vector>

#include "xrank/core/upoly.hpp"

namespace xrank {

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
struct Echelon {
  Mat<F> rref;               // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;   // pivot column of each row of rref
};

template <class F>
Echelon<F> row_reduce(Mat<F> m) {
  Echelon<F> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F k = inv(m[r][c]);
    for (auto& x : m[r]) x = x * k;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rref = std::move(m);
  return out;
}

template <class F>
int mat_rank(const Mat<F>& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

/// Kernel basis of m (vectors v with m v = 0), one per free column, with a 1 in
/// that column. `like` supplies field constants when m has no rows.
template <class F>
std::vector<std::vector<F>> mat_kernel(const Mat<F>& m, std::size_t cols, const F& like) {
  Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, zero_like(like));
    v[free] = one_like(like);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[static_cast<std::size_t>(e.pivots[i])] = -e.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution x of m x = b, if any.
template <class F>
std::optional<std::vector<F>> mat_solve(const Mat<F>& m, const std::vector<F>& b, std::size_t cols, const F& like) {
  Mat<F> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon<F> e = row_reduce(aug);
  std::vector<F> x(cols, zero_like(like));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (static_cast<std::size_t>(e.pivots[i]) == cols) return std::nullopt;
    x[static_cast<std::size_t>(e.pivots[i])] = e.rref[i][cols];
  }
  return x;
}

template <class F>
F mat_det(Mat<F> m, const F& like) {
  const std::size_t n = m.size();
  F det = one_like(like);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return zero_like(like);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    F k = inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      F f = m[i][c] * k;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

template <class F>
std::vector<F> mat_vec(const Mat<F>& m, const std::vector<F>& v, const F& like) {
  std::vector<F> out;
  for (const auto& row : m) {
    F acc = zero_like(like);
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  if (m.empty()) return {};
  Mat<F> t(m[0].size(), std::vector<F>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

/// Lifts a rational matrix into a field that contains Q.
template <class F>
Mat<F> lift_matrix(const Mat<Rational>& m, const F& like) {
  Mat<F> out;
  for (const auto& row : m) {
    std::vector<F> r;
    for (const auto& x : row) r.push_back(from_rational(like, x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace xrank
