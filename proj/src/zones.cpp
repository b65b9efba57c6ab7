#include "maxmin/zones.hpp"

#include <random>
#include <string>

namespace maxmin {

Dbm::Dbm(Matrix d) : d_(std::move(d)) {
  for (std::size_t i = 0; i < d_.n(); ++i) {
    if (d_(i, i) != ExtScalar(0)) {
      throw NonZeroDiagonal("DBM diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") is " + d_(i, i).to_string());
    }
    for (std::size_t j = 0; j < d_.n(); ++j) {
      if (d_(i, j).is_pos_inf()) throw Error("DBM entries must be rational or -inf");
    }
  }
}

Dbm Dbm::full_space(std::size_t n) { return Dbm(Matrix::identity(n)); }

std::optional<Dbm> canonicalize(const Dbm& z) {
  Matrix s = kleene_star(z.matrix());
  if (has_positive_diagonal(s)) return std::nullopt;
  Dbm out(std::move(s));
  out.canonical_ = true;
  return out;
}

bool is_strongly_definite(const Dbm& z) {
  return cycle_mean(z.matrix(), CycleMode::Max).value == ExtScalar(0);
}

Dbm meet(const Dbm& a, const Dbm& b) { return Dbm(mat_add(a.matrix(), b.matrix(), Semiring::MaxPlus)); }

bool contains(const Dbm& z, std::span<const ExtScalar> x) {
  if (x.size() != z.n()) throw DimensionMismatch("point dimension does not match zone");
  for (std::size_t i = 0; i < z.n(); ++i)
    for (std::size_t j = 0; j < z.n(); ++j)
      if (x[i] - x[j] < z(i, j)) return false;
  return true;
}

std::vector<Vector> sample(const Dbm& z, std::size_t count, std::uint64_t seed) {
  if (!z.is_canonical() || !z.matrix().all_finite()) {
    throw EmptyZone("sampling needs a canonical DBM of a nonempty zone with finite bounds");
  }
  const std::size_t n = z.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-40, 40);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<std::size_t> terms(1, n);
  std::bernoulli_distribution use_max(0.5);

  auto random_coeff = [&] { return ExtScalar(coeff(rng), den(rng)); };
  auto combination = [&](const std::vector<Vector>& pool, bool max_plus) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, pool.size())(rng);
    Vector acc = shifted(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)],
                         random_coeff());
    for (std::size_t t = 1; t < k; ++t) {
      const Vector term =
          shifted(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], random_coeff());
      for (std::size_t i = 0; i < n; ++i)
        acc[i] = trop_add(acc[i], term[i], max_plus ? Semiring::MaxPlus : Semiring::MinPlus);
    }
    return acc;
  };

  std::vector<Vector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(z.matrix().column(j));

  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    // Two layers: combinations of columns, then a combination of those in the
    // other semiring, which reaches points that are neither.
    std::vector<Vector> layer;
    const std::size_t width = terms(rng);
    const bool first_max = use_max(rng);
    for (std::size_t w = 0; w < width; ++w) layer.push_back(combination(columns, first_max));
    out.push_back(combination(layer, !first_max));
  }
  return out;
}

Dbm point_dbm(std::span<const ExtScalar> x) {
  Matrix d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d(i, j) = x[i] - x[j];
  return Dbm(std::move(d));
}

}  // namespace maxmin
