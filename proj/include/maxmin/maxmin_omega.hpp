#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "maxmin/tropical.hpp"

namespace maxmin {

/// ω = p/n, 1 ≤ p ≤ n. The maxmin-ω operation picks the p-th smallest element.
class Threshold {
 public:
  Threshold(std::size_t p, std::size_t n);

  std::size_t p() const { return p_; }
  std::size_t n() const { return n_; }
  /// Co-rank n + 1 − p.
  std::size_t q() const { return n_ + 1 - p_; }

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::size_t p_;
  std::size_t n_;
};

/// Calls fn(subset) for every k-subset of {0,…,n−1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const std::size_t>)>& fn);

/// p-th smallest element of the multiset s (counting multiplicity).
ExtScalar omega_select(std::span<const ExtScalar> s, const Threshold& t);

/// min over p-subsets C of max_{i∈C} s_i (brute force).
ExtScalar omega_select_cnf(std::span<const ExtScalar> s, const Threshold& t);

/// max over (n+1−p)-subsets C of min_{i∈C} s_i (brute force).
ExtScalar omega_select_dnf(std::span<const ExtScalar> s, const Threshold& t);

/// (A ⊗_ω x)_i = omega_select({A(i,j) + x_j}).
Vector omega_matvec(const Matrix& a, std::span<const ExtScalar> x, const Threshold& t);

/// A ⊗_ω M, applied column by column.
Matrix omega_matmul(const Matrix& a, const Matrix& m, const Threshold& t);

/// Lower bound of a ⊗_ω x − b ⊗_ω x over x in zone(D):
///
///   min over |S1| = p, |S2| = n+1−p of max_{i∈S1, j∈S2} (a_i − b_j + D(i,j)).
///
/// Evaluated per row subset S1: the column scores g_j = max_{i∈S1} F(i,j) are
/// ranked and the (n+1−p)-th smallest is taken, which is the minimum over all
/// column subsets of size n+1−p.
ExtScalar min_max_value(const Matrix& d, std::span<const ExtScalar> a, std::span<const ExtScalar> b,
                        const Threshold& t);

/// Same quantity by literal enumeration of all (S1, S2) pairs.
ExtScalar min_max_value_naive(const Matrix& d, std::span<const ExtScalar> a,
                              std::span<const ExtScalar> b, const Threshold& t);

/// MinMaxValue of a precombined matrix F.
ExtScalar min_max_value(const Matrix& f, const Threshold& t);

}  // namespace maxmin
