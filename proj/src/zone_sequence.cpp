#include <algorithm>
#include <sstream>

#include "maxmin/eigensolver.hpp"

namespace maxmin {

bool Digraph::has_arc(std::size_t from, std::size_t to) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{from, to});
}

bool Digraph::subgraph_of(const Digraph& other) const {
  return std::all_of(arcs.begin(), arcs.end(),
                     [&](const Arc& a) { return other.has_arc(a.from, a.to); });
}

Digraph finite_entry_graph(const Matrix& m) {
  Digraph g{m.n(), {}};
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j)
      if (m(i, j).is_finite()) g.arcs.push_back({i, j});
  return g;
}

std::string to_dot(const Digraph& g, const Matrix& weights, const Digraph* bold,
                   std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.n; ++v) os << "  " << v + 1 << ";\n";
  for (const Arc& a : g.arcs) {
    os << "  " << a.from + 1 << " -> " << a.to + 1 << " [label=\"" << weights(a.from, a.to) << '"';
    if (bold != nullptr && bold->has_arc(a.from, a.to)) os << ", style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

Dbm next_dbm(const Dbm& d, const Matrix& a, const Threshold& t) {
  const std::size_t n = a.n();
  if (d.n() != n || t.n() != n) throw DimensionMismatch("next_dbm: dimension mismatch");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = (i == j) ? ExtScalar(0) : min_max_value(d.matrix(), a.row(i), a.row(j), t);
    }
  }
  return Dbm(std::move(out));
}

namespace {

void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeLimitReached();
}

void require_problem(const Matrix& a, const Threshold& t) {
  if (a.n() == 0 || a.n() != t.n()) throw DimensionMismatch("matrix and threshold disagree on n");
  if (!a.all_finite()) throw Error("problem matrix must have finite entries");
}

}  // namespace

StabilizeResult stabilize(const Matrix& a, const Threshold& t, std::size_t max_iters,
                          Deadline deadline) {
  require_problem(a, t);
  StabilizeResult r;
  r.trace.push_back(Dbm::full_space(a.n()));
  for (std::size_t k = 0; k < max_iters; ++k) {
    check_deadline(deadline);
    Dbm next = next_dbm(r.trace.back(), a, t);
    if (!canonicalize(next)) {
      r.trace.push_back(std::move(next));
      return r;
    }
    if (next == r.trace.back()) {
      r.dbm = std::move(next);
      return r;
    }
    r.trace.push_back(std::move(next));
  }
  throw IterationBudgetExceeded("zone sequence did not stabilize within " +
                                std::to_string(max_iters) + " iterations");
}

StabilizeResult stabilize_from(const Matrix& a, const Threshold& t, const Dbm& seed,
                               std::size_t max_iters, Deadline deadline) {
  require_problem(a, t);
  StabilizeResult r;
  r.trace.push_back(seed);
  std::optional<Dbm> current = canonicalize(seed);
  if (!current) return r;
  for (std::size_t k = 0; k < max_iters; ++k) {
    check_deadline(deadline);
    std::optional<Dbm> next = canonicalize(meet(*current, next_dbm(*current, a, t)));
    if (!next) return r;
    if (*next == *current) {
      r.dbm = std::move(next);
      return r;
    }
    r.trace.push_back(*next);
    current = std::move(next);
  }
  throw IterationBudgetExceeded("seeded zone sequence did not stabilize within " +
                                std::to_string(max_iters) + " iterations");
}

BoundMatrices compute_bounds(const Matrix& a, const Dbm& dbar, const Threshold& t) {
  const std::size_t n = a.n();
  if (dbar.n() != n) throw DimensionMismatch("compute_bounds: dimension mismatch");
  const Matrix& d = dbar.matrix();
  BoundMatrices b;
  b.L = omega_matmul(a, d, t);
  b.U = omega_matmul(a, d.negated().transposed(), t);
  b.P = elementwise_sum(a, d.transposed());
  b.Q = elementwise_sum(a, d.negated());
  b.l = b.L(0, 0);
  b.u = b.U(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (b.L(i, i) > b.l) b.l = b.L(i, i);
    if (b.U(i, i) < b.u) b.u = b.U(i, i);
  }
  return b;
}

ActiveStructure classify_entries(const Matrix& a, const BoundMatrices& b) {
  const std::size_t n = a.n();
  ActiveStructure s{Matrix(n, ExtScalar::pos_inf()), Matrix(n, ExtScalar::pos_inf()), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtScalar& v = a(i, j);
      if (v == b.L(i, j) && v == b.U(i, j)) s.T(i, j) = v;
      const bool inactive = v < b.L(i, j) || v > b.U(i, j) || b.P(i, j) > b.u || b.Q(i, j) < b.l;
      if (!inactive) s.A_hat(i, j) = v;
    }
  }
  s.act = finite_entry_graph(s.T);
  s.pos = finite_entry_graph(s.A_hat);
  return s;
}

void promote_rows(ActiveStructure& s) {
  const std::size_t n = s.T.n();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t t_finite = 0;
    std::size_t a_finite = 0;
    for (std::size_t j = 0; j < n; ++j) {
      t_finite += s.T(i, j).is_finite() ? 1 : 0;
      a_finite += s.A_hat(i, j).is_finite() ? 1 : 0;
    }
    if (t_finite > 0) {
      for (std::size_t j = 0; j < n; ++j) s.A_hat(i, j) = s.T(i, j);
    } else if (a_finite == 1) {
      for (std::size_t j = 0; j < n; ++j) s.T(i, j) = s.A_hat(i, j);
    }
  }
  s.act = finite_entry_graph(s.T);
  s.pos = finite_entry_graph(s.A_hat);
}

Digraph saturation_graph(const Matrix& a, const Threshold& t, std::span<const ExtScalar> x) {
  const Vector y = omega_matvec(a, x, t);
  Digraph g{a.n(), {}};
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (y[i] == a(i, j) + x[j]) g.arcs.push_back({i, j});
  return g;
}

bool verify_eigenvector(const Matrix& a, const Threshold& t, const ExtScalar& lambda,
                        std::span<const ExtScalar> x) {
  if (x.size() != a.n()) throw SizeMismatch("eigenvector length does not match matrix");
  if (!lambda.is_finite()) return false;
  for (const auto& v : x)
    if (!v.is_finite()) return false;
  const Vector y = omega_matvec(a, x, t);
  for (std::size_t i = 0; i < a.n(); ++i)
    if (y[i] != x[i] + lambda) return false;
  return true;
}

}  // namespace maxmin
