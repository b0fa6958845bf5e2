#pragma once

// Phase-one simplex with Bland's rule: finds x >= 0 with A x = b, or reports
// that none exists. Exact when T is.

#include <optional>
#include <vector>

#include "fdist/scalar.hpp"

namespace fdist::detail {

template <Scalar T>
std::optional<std::vector<T>> feasible_point(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < T(0)) {
      for (auto& v : a[i]) v = T(0) - v;
      b[i] = T(0) - b[i];
    }
  }

  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<T>> tab(m + 1, std::vector<T>(width, T(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = T(1);
    tab[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  // Objective row: minimize the artificial sum, expressed over non-basics.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) tab[m][j] -= tab[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (approx_lt(tab[m][j], T(0))) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    T best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!approx_lt(T(0), tab[i][enter])) continue;
      T ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (approx_eq(ratio, best_ratio) && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one

    T pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v = v / pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || approx_zero(tab[i][enter])) continue;
      T factor = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
  }

  if (!approx_zero(tab[m][width - 1])) return std::nullopt;
  std::vector<T> x(n, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][width - 1];
  return x;
}

}  // namespace fdist::detail
