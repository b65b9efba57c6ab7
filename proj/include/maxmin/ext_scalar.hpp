#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "maxmin/error.hpp"

namespace maxmin {

/// Exact rational extended with the two sentinels −∞ and +∞.
///
/// Finite values are kept in canonical form by GMP, so equality is exact.
/// Sums that mix −∞ and +∞ throw UndefinedInfinitySum instead of picking a
/// convention; callers that need one (tropical products over matrices with
/// "absent" entries) resolve the sentinel before adding.
class ExtScalar {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtScalar() = default;
  ExtScalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  explicit ExtScalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  ExtScalar(long num, long den);

  static ExtScalar neg_inf() { return ExtScalar(Kind::NegInf); }
  static ExtScalar pos_inf() { return ExtScalar(Kind::PosInf); }

  /// Parses "7", "-3/4", "-inf", "+inf" (also "inf").
  static ExtScalar parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_integer() const { return is_finite() && value_.get_den() == 1; }

  /// Only meaningful for finite values.
  const mpq_class& value() const { return value_; }

  std::string to_string() const;

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  ExtScalar operator-() const;
  ExtScalar& operator+=(const ExtScalar& b) { return *this = *this + b; }
  ExtScalar& operator-=(const ExtScalar& b) { return *this = *this - b; }

  /// Ordinary division of a finite value by a positive integer (cycle means,
  /// bisection midpoints). Infinities pass through unchanged.
  ExtScalar divided_by(long d) const;

 private:
  explicit ExtScalar(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& s);

using Vector = std::vector<ExtScalar>;

std::string to_string(const Vector& v);

/// x + c componentwise.
Vector shifted(const Vector& x, const ExtScalar& c);

}  // namespace maxmin
