#include "maxmin/maxmin_omega.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace maxmin {

Threshold::Threshold(std::size_t p, std::size_t n) : p_(p), n_(n) {
  if (n == 0 || p < 1 || p > n) {
    throw InvalidThreshold("threshold p=" + std::to_string(p) + " outside [1, " + std::to_string(n) +
                           "]");
  }
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t r = pos; r < k; ++r) idx[r] = idx[r - 1] + 1;
  }
}

namespace {

void require_size(std::size_t got, const Threshold& t) {
  if (got != t.n()) {
    throw SizeMismatch("multiset has " + std::to_string(got) + " elements, threshold expects " +
                       std::to_string(t.n()));
  }
}

}  // namespace

ExtScalar omega_select(std::span<const ExtScalar> s, const Threshold& t) {
  require_size(s.size(), t);
  std::vector<const ExtScalar*> ptrs(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) ptrs[i] = &s[i];
  auto nth = ptrs.begin() + static_cast<std::ptrdiff_t>(t.p() - 1);
  std::nth_element(ptrs.begin(), nth, ptrs.end(),
                   [](const ExtScalar* x, const ExtScalar* y) { return *x < *y; });
  return **nth;
}

ExtScalar omega_select_cnf(std::span<const ExtScalar> s, const Threshold& t) {
  require_size(s.size(), t);
  ExtScalar best = ExtScalar::pos_inf();
  for_each_subset(t.n(), t.p(), [&](std::span<const std::size_t> c) {
    const ExtScalar* m = &s[c[0]];
    for (std::size_t i : c)
      if (s[i] > *m) m = &s[i];
    if (*m < best) best = *m;
  });
  return best;
}

ExtScalar omega_select_dnf(std::span<const ExtScalar> s, const Threshold& t) {
  require_size(s.size(), t);
  ExtScalar best = ExtScalar::neg_inf();
  for_each_subset(t.n(), t.q(), [&](std::span<const std::size_t> c) {
    const ExtScalar* m = &s[c[0]];
    for (std::size_t i : c)
      if (s[i] < *m) m = &s[i];
    if (*m > best) best = *m;
  });
  return best;
}

Vector omega_matvec(const Matrix& a, std::span<const ExtScalar> x, const Threshold& t) {
  if (a.n() != t.n() || x.size() != t.n()) {
    throw SizeMismatch("omega_matvec: matrix " + std::to_string(a.n()) + ", vector " +
                       std::to_string(x.size()) + ", threshold n=" + std::to_string(t.n()));
  }
  Vector terms(t.n());
  Vector y;
  y.reserve(t.n());
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) terms[j] = a(i, j) + x[j];
    y.push_back(omega_select(terms, t));
  }
  return y;
}

Matrix omega_matmul(const Matrix& a, const Matrix& m, const Threshold& t) {
  if (a.n() != m.n()) throw DimensionMismatch("omega_matmul: dimension mismatch");
  Matrix out(a.n());
  for (std::size_t j = 0; j < m.n(); ++j) {
    Vector col = omega_matvec(a, m.column(j), t);
    for (std::size_t i = 0; i < a.n(); ++i) out(i, j) = std::move(col[i]);
  }
  return out;
}

namespace {

Matrix combine(const Matrix& d, std::span<const ExtScalar> a, std::span<const ExtScalar> b,
               const Threshold& t) {
  if (d.n() != t.n() || a.size() != t.n() || b.size() != t.n()) {
    throw SizeMismatch("min_max_value: operand sizes disagree with threshold n=" +
                       std::to_string(t.n()));
  }
  Matrix f(d.n());
  for (std::size_t i = 0; i < d.n(); ++i)
    for (std::size_t j = 0; j < d.n(); ++j) f(i, j) = (a[i] - b[j]) + d(i, j);
  return f;
}

}  // namespace

ExtScalar min_max_value(const Matrix& f, const Threshold& t) {
  const std::size_t n = t.n();
  if (f.n() != n) throw SizeMismatch("min_max_value: matrix size disagrees with threshold");
  const ExtScalar* best = nullptr;
  std::vector<const ExtScalar*> scores(n);
  const auto rank = static_cast<std::ptrdiff_t>(t.q() - 1);
  for_each_subset(n, t.p(), [&](std::span<const std::size_t> rows) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtScalar* m = &f(rows[0], j);
      for (std::size_t i : rows)
        if (f(i, j) > *m) m = &f(i, j);
      scores[j] = m;
    }
    std::nth_element(scores.begin(), scores.begin() + rank, scores.end(),
                     [](const ExtScalar* x, const ExtScalar* y) { return *x < *y; });
    if (best == nullptr || *scores[static_cast<std::size_t>(rank)] < *best) {
      best = scores[static_cast<std::size_t>(rank)];
    }
  });
  return *best;
}

ExtScalar min_max_value(const Matrix& d, std::span<const ExtScalar> a, std::span<const ExtScalar> b,
                        const Threshold& t) {
  return min_max_value(combine(d, a, b, t), t);
}

ExtScalar min_max_value_naive(const Matrix& d, std::span<const ExtScalar> a,
                              std::span<const ExtScalar> b, const Threshold& t) {
  const Matrix f = combine(d, a, b, t);
  ExtScalar best = ExtScalar::pos_inf();
  for_each_subset(t.n(), t.p(), [&](std::span<const std::size_t> rows) {
    for_each_subset(t.n(), t.q(), [&](std::span<const std::size_t> cols) {
      ExtScalar block = ExtScalar::neg_inf();
      for (std::size_t i : rows)
        for (std::size_t j : cols)
          if (f(i, j) > block) block = f(i, j);
      if (block < best) best = block;
    });
  });
  return best;
}

}  // namespace maxmin
