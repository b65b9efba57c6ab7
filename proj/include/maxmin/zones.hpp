#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxmin/tropical.hpp"

namespace maxmin {

/// Difference-bound matrix of a closed zone {x : x_i − x_j ≥ D(i,j)}.
///
/// Entries are rationals or −∞ (no constraint); the diagonal is always 0.
class Dbm {
 public:
  /// Throws NonZeroDiagonal on a nonzero diagonal entry and Error on +∞.
  Dbm() = default;
  explicit Dbm(Matrix d);

  /// The whole space: the max-plus identity.
  static Dbm full_space(std::size_t n);

  std::size_t n() const { return d_.n(); }
  const Matrix& matrix() const { return d_; }
  const ExtScalar& operator()(std::size_t i, std::size_t j) const { return d_(i, j); }

  /// Set only by canonicalize(): the matrix equals its own Kleene star.
  bool is_canonical() const { return canonical_; }

  /// Equality of the bound matrices (not of the zones).
  friend bool operator==(const Dbm& a, const Dbm& b) { return a.d_ == b.d_; }

 private:
  friend std::optional<Dbm> canonicalize(const Dbm& z);

  Matrix d_;
  bool canonical_ = false;
};

/// Tightest representation D* of the same zone, or nullopt when the zone is
/// empty (a positive diagonal entry appears in the closure).
std::optional<Dbm> canonicalize(const Dbm& z);

/// Zero diagonal and maximum cycle mean 0, i.e. the zone is nonempty.
bool is_strongly_definite(const Dbm& z);

/// DBM of the intersection: entrywise max. Not canonicalized.
Dbm meet(const Dbm& a, const Dbm& b);

/// x_i − x_j ≥ D(i,j) for all i, j.
bool contains(const Dbm& z, std::span<const ExtScalar> x);

/// Points of a canonical nonempty zone, built as random max-plus and
/// min-plus combinations of its columns. Throws EmptyZone when z is not a
/// canonical DBM of a nonempty zone with all entries finite, since columns
/// with −∞ are not points.
std::vector<Vector> sample(const Dbm& z, std::size_t count, std::uint64_t seed);

/// DBM of the single-direction line {λ + x}: D(i,j) = x_i − x_j.
Dbm point_dbm(std::span<const ExtScalar> x);

}  // namespace maxmin
