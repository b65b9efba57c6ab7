#include "maxmin/tropical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maxmin {

ExtScalar trop_add(const ExtScalar& a, const ExtScalar& b, Semiring s) {
  if (s == Semiring::MaxPlus) return a < b ? b : a;
  return b < a ? b : a;
}

ExtScalar trop_mul(const ExtScalar& a, const ExtScalar& b) { return a + b; }

Matrix::Matrix(std::size_t n, const ExtScalar& fill) : n_(n), data_(n * n, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<ExtScalar>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionMismatch("matrix literal is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n, Semiring s) {
  Matrix m(n, s == Semiring::MaxPlus ? ExtScalar::neg_inf() : ExtScalar::pos_inf());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExtScalar(0);
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

Vector Matrix::column(std::size_t j) const {
  Vector c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExtScalar& v) { return v.is_finite(); });
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::negated() const {
  Matrix t(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = -data_[k];
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("matrix dimensions " + std::to_string(a.n()) + " and " +
                            std::to_string(b.n()) + " differ");
  }
}

// Reads the opposite-sign sentinel as the semiring's zero element.
const ExtScalar& read(const ExtScalar& v, Semiring s) {
  static const ExtScalar kNegInf = ExtScalar::neg_inf();
  static const ExtScalar kPosInf = ExtScalar::pos_inf();
  if (s == Semiring::MaxPlus && v.is_pos_inf()) return kNegInf;
  if (s == Semiring::MinPlus && v.is_neg_inf()) return kPosInf;
  return v;
}

ExtScalar semiring_zero(Semiring s) {
  return s == Semiring::MaxPlus ? ExtScalar::neg_inf() : ExtScalar::pos_inf();
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b, Semiring s) {
  require_same_dim(a, b);
  Matrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = trop_add(a(i, j), b(i, j), s);
  return c;
}

Matrix elementwise_sum(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, Semiring s) {
  require_same_dim(a, b);
  const std::size_t n = a.n();
  Matrix c(n, semiring_zero(s));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ExtScalar acc = semiring_zero(s);
      for (std::size_t k = 0; k < n; ++k) {
        acc = trop_add(acc, read(a(i, k), s) + read(b(k, j), s), s);
      }
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

Vector mat_vec(const Matrix& a, std::span<const ExtScalar> x, Semiring s) {
  if (x.size() != a.n()) throw DimensionMismatch("vector length does not match matrix");
  Vector y;
  y.reserve(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    ExtScalar acc = semiring_zero(s);
    for (std::size_t k = 0; k < a.n(); ++k) acc = trop_add(acc, read(a(i, k), s) + read(x[k], s), s);
    y.push_back(std::move(acc));
  }
  return y;
}

Matrix mat_pow(const Matrix& a, unsigned k, Semiring s) {
  Matrix r = Matrix::identity(a.n(), s);
  for (unsigned i = 0; i < k; ++i) r = mat_mul(r, a, s);
  return r;
}

Matrix kleene_star(const Matrix& d) {
  const std::size_t n = d.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != ExtScalar(0)) {
      throw NonZeroDiagonal("Kleene star input has diagonal entry " + d(i, i).to_string() +
                            " at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    }
  }
  Matrix s = d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s(i, j).is_pos_inf()) throw Error("Kleene star input contains +inf");

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (s(k, j).is_neg_inf()) continue;
        ExtScalar via = s(i, k) + s(k, j);
        if (via > s(i, j)) s(i, j) = std::move(via);
      }
    }
  }
  return s;
}

bool has_positive_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.n(); ++i)
    if (m(i, i) > ExtScalar(0)) return true;
  return false;
}

ExtScalar mean_of_cycle(const Matrix& a, std::span<const std::size_t> cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  ExtScalar total(0);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    total += a(cycle[k], cycle[(k + 1) % cycle.size()]);
  }
  return total.divided_by(static_cast<long>(cycle.size()));
}

namespace {

// Karp's maximum cycle mean with witness. Arcs are the finite entries.
CycleMeanResult karp_max(const Matrix& a) {
  const std::size_t n = a.n();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // best[k][v]: heaviest walk of exactly k arcs ending in v (from any start).
  std::vector<std::vector<ExtScalar>> best(n + 1, std::vector<ExtScalar>(n, ExtScalar::neg_inf()));
  std::vector<std::vector<std::size_t>> pred(n + 1, std::vector<std::size_t>(n, kNone));
  for (std::size_t v = 0; v < n; ++v) best[0][v] = ExtScalar(0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (best[k - 1][u].is_neg_inf()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!a(u, v).is_finite()) continue;
        ExtScalar w = best[k - 1][u] + a(u, v);
        if (pred[k][v] == kNone || w > best[k][v]) {
          best[k][v] = std::move(w);
          pred[k][v] = u;
        }
      }
    }
  }

  CycleMeanResult result{ExtScalar::neg_inf(), {}};
  std::size_t argmax = kNone;
  for (std::size_t v = 0; v < n; ++v) {
    if (best[n][v].is_neg_inf()) continue;
    ExtScalar inner = ExtScalar::pos_inf();
    for (std::size_t k = 0; k < n; ++k) {
      if (best[k][v].is_neg_inf()) continue;
      ExtScalar r = (best[n][v] - best[k][v]).divided_by(static_cast<long>(n - k));
      if (r < inner) inner = std::move(r);
    }
    if (argmax == kNone || inner > result.value) {
      result.value = std::move(inner);
      argmax = v;
    }
  }
  if (argmax == kNone) return result;

  // Back-walk the optimal n-arc walk; every cycle closed along it is critical.
  std::vector<std::size_t> walk(n + 1);
  walk[n] = argmax;
  for (std::size_t k = n; k > 0; --k) walk[k - 1] = pred[k][walk[k]];
  std::vector<std::size_t> seen_at(n, kNone);
  for (std::size_t idx = 0; idx <= n; ++idx) {
    const std::size_t v = walk[idx];
    if (seen_at[v] != kNone) {
      result.witness_cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]),
                                  walk.begin() + static_cast<std::ptrdiff_t>(idx));
      break;
    }
    seen_at[v] = idx;
  }
  if (result.witness_cycle.empty() || mean_of_cycle(a, result.witness_cycle) != result.value) {
    throw std::logic_error("Karp witness reconstruction failed");
  }
  return result;
}

}  // namespace

CycleMeanResult cycle_mean(const Matrix& a, CycleMode mode) {
  if (mode == CycleMode::Max) return karp_max(a);
  Matrix neg(a.n(), ExtScalar::neg_inf());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (a(i, j).is_finite()) neg(i, j) = -a(i, j);
  CycleMeanResult r = karp_max(neg);
  r.value = -r.value;
  return r;
}

}  // namespace maxmin
