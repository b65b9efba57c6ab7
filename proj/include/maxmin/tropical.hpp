#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "maxmin/ext_scalar.hpp"

namespace maxmin {

enum class Semiring { MaxPlus, MinPlus };

/// a ⊕ b: max under max-plus, min under min-plus.
ExtScalar trop_add(const ExtScalar& a, const ExtScalar& b, Semiring s);

/// a ⊗ b = a + b. Throws UndefinedInfinitySum on −∞ ⊗ +∞.
ExtScalar trop_mul(const ExtScalar& a, const ExtScalar& b);

/// Dense square matrix of ExtScalar, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const ExtScalar& fill = ExtScalar(0));
  Matrix(std::initializer_list<std::initializer_list<ExtScalar>> rows);

  /// Max-plus identity: 0 on the diagonal, −∞ elsewhere.
  static Matrix identity(std::size_t n, Semiring s = Semiring::MaxPlus);

  std::size_t n() const { return n_; }

  ExtScalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ExtScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const ExtScalar> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  bool all_finite() const;
  Matrix transposed() const;
  Matrix negated() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<ExtScalar> data_;
};

/// Entrywise a ⊕ b.
Matrix mat_add(const Matrix& a, const Matrix& b, Semiring s);

/// Entrywise a + b (ordinary addition of matrices).
Matrix elementwise_sum(const Matrix& a, const Matrix& b);

/// Tropical product. The opposite-sign sentinel is read as the semiring's
/// zero: under max-plus +∞ entries count as −∞, under min-plus −∞ entries
/// count as +∞. This is how the strongly active matrix T (whose "absent"
/// entries are +∞) is multiplied in both senses.
Matrix mat_mul(const Matrix& a, const Matrix& b, Semiring s);

/// Tropical matrix-vector product with the same sentinel convention.
Vector mat_vec(const Matrix& a, std::span<const ExtScalar> x, Semiring s);

/// Max-plus A^k (k ≥ 0).
Matrix mat_pow(const Matrix& a, unsigned k, Semiring s = Semiring::MaxPlus);

/// Max-plus Kleene star of a zero-diagonal matrix, by Floyd–Warshall closure.
///
/// Without positive cycles the result is ⊕_{k=0}^{n−1} D^k. With a positive
/// cycle some diagonal entry of the result is > 0; that is returned as is and
/// used by callers as the emptiness signal.
Matrix kleene_star(const Matrix& d);

/// True iff some diagonal entry is > 0.
bool has_positive_diagonal(const Matrix& m);

struct CycleMeanResult {
  /// Finite, or −∞ (max mode) / +∞ (min mode) when there is no cycle.
  ExtScalar value;
  /// Node sequence of a cycle achieving the mean; empty when acyclic.
  std::vector<std::size_t> witness_cycle;
};

enum class CycleMode { Max, Min };

/// Maximum or minimum cycle mean over the digraph of finite entries (Karp).
CycleMeanResult cycle_mean(const Matrix& a, CycleMode mode);

/// Mean weight of the cycle i_1 → … → i_k → i_1.
ExtScalar mean_of_cycle(const Matrix& a, std::span<const std::size_t> cycle);

}  // namespace maxmin
