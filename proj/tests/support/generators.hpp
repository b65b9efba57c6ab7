#pragma once

#include <cstdint>
#include <random>

#include "maxmin/zones.hpp"

namespace maxmin::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Small rationals with denominators 1..4 so ties and cancellations are common.
inline ExtScalar rational(Rng& rng, long lo = -20, long hi = 20) {
  const long den = uniform(rng, 1, 4);
  return ExtScalar(uniform(rng, lo * den, hi * den), den);
}

inline Matrix finite_matrix(Rng& rng, std::size_t n, long lo = -20, long hi = 20) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rational(rng, lo, hi);
  return a;
}

inline Matrix integer_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ExtScalar(uniform(rng, lo, hi));
  return a;
}

inline Vector finite_vector(Rng& rng, std::size_t n, long lo = -20, long hi = 20) {
  Vector x(n);
  for (auto& v : x) v = rational(rng, lo, hi);
  return x;
}

/// Values with repeats and occasional infinities.
inline Vector multiset(Rng& rng, std::size_t n) {
  Vector s(n);
  for (auto& v : s) {
    const long r = uniform(rng, 0, 19);
    if (r == 0) v = ExtScalar::neg_inf();
    else if (r == 1) v = ExtScalar::pos_inf();
    else v = ExtScalar(uniform(rng, -4, 4), uniform(rng, 1, 2));
  }
  return s;
}

/// Zero diagonal, off-diagonal rationals in [lo, hi] or −∞ with probability
/// `absent`. With hi > 0 a good share of them describe empty zones.
inline Dbm random_dbm(Rng& rng, std::size_t n, long lo = -10, long hi = 4, double absent = 0.2) {
  Matrix d(n, ExtScalar::neg_inf());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = i == j ? ExtScalar(0) : (coin(rng, absent) ? ExtScalar::neg_inf() : rational(rng, lo, hi));
  return Dbm(std::move(d));
}

}  // namespace maxmin::testing
