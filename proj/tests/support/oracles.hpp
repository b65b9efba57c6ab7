#pragma once

// Deliberately naive reference implementations, kept apart from the library.

#include <algorithm>
#include <functional>
#include <optional>

#include "maxmin/zones.hpp"

namespace maxmin::testing {

inline ExtScalar rank_select(Vector s, std::size_t p) {
  std::sort(s.begin(), s.end());
  return s[p - 1];
}

/// Max-plus product reading both sentinels as "no arc".
inline Matrix naive_maxplus_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.n();
  Matrix c(n, ExtScalar::neg_inf());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a(i, k).is_finite() && b(k, j).is_finite()) c(i, j) = std::max(c(i, j), a(i, k) + b(k, j));
  return c;
}

/// I ⊕ D ⊕ D² ⊕ … ⊕ Dⁿ.
inline Matrix truncated_star(const Matrix& d) {
  const std::size_t n = d.n();
  Matrix acc = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = naive_maxplus_product(power, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) = std::max(acc(i, j), power(i, j));
  }
  return acc;
}

/// Extreme mean over every simple cycle of the finite-entry digraph, by DFS.
inline std::optional<ExtScalar> brute_cycle_mean(const Matrix& a, bool maximize) {
  const std::size_t n = a.n();
  std::optional<ExtScalar> best;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, const ExtScalar&, long)> dfs =
      [&](std::size_t start, std::size_t v, const ExtScalar& w, long len) {
        for (std::size_t next = start; next < n; ++next) {
          if (!a(v, next).is_finite()) continue;
          if (next == start) {
            const ExtScalar mean = (w + a(v, next)).divided_by(len + 1);
            if (!best || (maximize ? mean > *best : mean < *best)) best = mean;
          } else if (!on_path[next]) {
            on_path[next] = true;
            dfs(start, next, w + a(v, next), len + 1);
            on_path[next] = false;
          }
        }
      };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, ExtScalar(0), 0);
    on_path[s] = false;
  }
  return best;
}

inline bool in_zone(const Matrix& d, const Vector& x) {
  for (std::size_t i = 0; i < d.n(); ++i)
    for (std::size_t j = 0; j < d.n(); ++j)
      if (d(i, j).is_finite() && x[i] - x[j] < d(i, j)) return false;
  return true;
}

}  // namespace maxmin::testing
