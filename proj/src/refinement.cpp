#include <algorithm>
#include <stdexcept>

#include "maxmin/eigensolver.hpp"

namespace maxmin {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Solved:
      return "Solved";
    case Status::Conjectured:
      return "Conjectured";
    case Status::Unresolved:
      return "Unresolved";
    case Status::Failed:
      return "Failed";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  for (Status v : {Status::Solved, Status::Conjectured, Status::Unresolved, Status::Failed})
    if (to_string(v) == s) return v;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Both:
      return "both";
    case Branch::Lower:
      return "lower";
    case Branch::Upper:
      return "upper";
    case Branch::None:
      return "none";
  }
  return "?";
}

Branch branch_from_string(std::string_view s) {
  for (Branch v : {Branch::Both, Branch::Lower, Branch::Upper, Branch::None})
    if (to_string(v) == s) return v;
  throw ParseError("unknown branch '" + std::string(s) + "'");
}

namespace {

// Adds, for every finite T(i,j), the constraint A(i,j) + x_j ≥ m + x_i
// (at_least) and/or A(i,j) + x_j ≤ m + x_i (at_most).
Dbm with_active_constraints(const Dbm& d, const Matrix& a, const Matrix& t_matrix,
                            const ExtScalar& m, bool at_least, bool at_most) {
  Matrix out = d.matrix();
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!t_matrix(i, j).is_finite()) continue;
      if (at_least) out(j, i) = trop_add(out(j, i), m - a(i, j), Semiring::MaxPlus);
      if (at_most) out(i, j) = trop_add(out(i, j), a(i, j) - m, Semiring::MaxPlus);
    }
  }
  return Dbm(std::move(out));
}

std::vector<std::size_t> verified_columns(const Matrix& a, const Threshold& t,
                                          const ExtScalar& lambda, const Dbm& d) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < d.n(); ++j)
    if (verify_eigenvector(a, t, lambda, d.matrix().column(j))) cols.push_back(j);
  return cols;
}

// Classification of `d` under known scalar bounds, including row promotion.
ActiveStructure classify_with(const Matrix& a, BoundMatrices b, const ExtScalar& l,
                              const ExtScalar& u) {
  b.l = l;
  b.u = u;
  ActiveStructure s = classify_entries(a, b);
  promote_rows(s);
  return s;
}

struct Tightened {
  BoundMatrices b;
  ActiveStructure s;
  ExtScalar lo;
  ExtScalar hi;
};

// Bounds, classification and cycle-mean clamping of [lo, hi] on zone `d`.
Tightened tighten(const Matrix& a, const Threshold& t, const Dbm& d, ExtScalar lo, ExtScalar hi) {
  BoundMatrices b = compute_bounds(a, d, t);
  lo = std::max(lo, b.l);
  hi = std::min(hi, b.u);
  ActiveStructure s = classify_with(a, b, lo, hi);
  const ExtScalar cmin = cycle_mean(s.A_hat, CycleMode::Min).value;
  const ExtScalar cmax = cycle_mean(s.A_hat, CycleMode::Max).value;
  if (cmin.is_finite()) lo = std::max(lo, cmin);
  if (cmax.is_finite()) hi = std::min(hi, cmax);
  return {std::move(b), std::move(s), std::move(lo), std::move(hi)};
}

struct Certificate {
  Dbm dbm;
  bool changed = false;
};

// Tightens zone d with the equalities A(i,j) + x_j = λ + x_i of certified
// arcs until a column verifies or the zone stops changing. nullopt means the
// constraints emptied the zone.
std::optional<Certificate> extract_certificate(const Matrix& a, const Threshold& t,
                                               const ExtScalar& lambda, Dbm d,
                                               const SolveConfig& config, const Deadline& deadline) {
  Certificate c{d, false};
  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    if (!verified_columns(a, t, lambda, c.dbm).empty()) return c;
    const ActiveStructure s = classify_with(a, compute_bounds(a, c.dbm, t), lambda, lambda);
    const Dbm seed = with_active_constraints(c.dbm, a, s.T, lambda, true, true);
    StabilizeResult r = stabilize_from(a, t, seed, config.max_iters, deadline);
    if (!r.dbm) return std::nullopt;
    if (*r.dbm == c.dbm) return c;
    c.dbm = std::move(*r.dbm);
    c.changed = true;
  }
  return c;
}

void set_act_cycle_means(SolveReport& rep) {
  rep.act_min_cycle_mean = cycle_mean(rep.active.T, CycleMode::Min).value;
  rep.act_max_cycle_mean = cycle_mean(rep.active.T, CycleMode::Max).value;
}

void finalize(SolveReport& rep, const Matrix& a, const Threshold& t) {
  rep.bounds = compute_bounds(a, rep.refined_dbm, t);
  if (rep.lambda) {
    rep.active = classify_with(a, rep.bounds, *rep.lambda, *rep.lambda);
    rep.eigenvector_columns = verified_columns(a, t, *rep.lambda, rep.refined_dbm);
    if (!rep.eigenvector_columns.empty() && !rep.eigenvector) {
      rep.eigenvector = rep.refined_dbm.matrix().column(rep.eigenvector_columns.front());
    }
  }
}

}  // namespace

SolveReport refine(const Matrix& a, const Threshold& t, const Dbm& stabilized,
                   const ActiveStructure& active, const BoundMatrices& bounds,
                   const SolveConfig& config, Deadline deadline) {
  SolveReport rep;
  rep.n = a.n();
  rep.p = t.p();
  rep.stabilized_dbm = stabilized;
  rep.refined_dbm = stabilized;
  rep.initial_bounds = bounds;
  rep.initial_active = active;
  rep.bounds = bounds;
  rep.active = active;

  ExtScalar l = bounds.l;
  ExtScalar u = bounds.u;
  if (l > u) {
    rep.status = Status::Failed;
    rep.note = "initial bounds are inconsistent (l > u)";
    return rep;
  }

  Dbm d = stabilized;
  ActiveStructure s = active;
  try {
    for (std::size_t round = 1; round <= config.max_rounds; ++round) {
      const ExtScalar m = (l + u).divided_by(2);
      const Dbm lower_seed = with_active_constraints(d, a, s.T, m, true, false);
      const Dbm upper_seed = with_active_constraints(d, a, s.T, m, false, true);
      const std::optional<Dbm> lower = stabilize_from(a, t, lower_seed, config.max_iters, deadline).dbm;
      const std::optional<Dbm> upper = stabilize_from(a, t, upper_seed, config.max_iters, deadline).dbm;

      RoundRecord rec{round, m, Branch::None, l, u};
      if (lower && upper) {
        std::optional<Dbm> both = canonicalize(meet(*lower, *upper));
        if (!both) {
          rep.iterations.push_back(rec);
          rep.status = Status::Failed;
          rep.note = "meet of both nonempty over-approximations is empty";
          rep.refined_dbm = d;
          return rep;
        }
        d = std::move(*both);
        l = m;
        u = m;
        rec.branch = Branch::Both;
      } else if (upper) {
        d = *upper;
        u = m;
        rec.branch = Branch::Lower;
      } else if (lower) {
        d = *lower;
        l = m;
        rec.branch = Branch::Upper;
      } else {
        rep.iterations.push_back(rec);
        rep.status = Status::Failed;
        rep.note = "both over-approximations are empty";
        rep.refined_dbm = d;
        return rep;
      }

      Tightened tt = tighten(a, t, d, l, u);
      l = std::move(tt.lo);
      u = std::move(tt.hi);
      s = std::move(tt.s);
      const BoundMatrices& b = tt.b;

      rec.l = l;
      rec.u = u;
      rep.iterations.push_back(rec);
      rep.refined_dbm = d;
      rep.bounds = b;
      rep.active = s;

      if (l > u) {
        rep.status = Status::Failed;
        rep.note = "eigenvalue bounds crossed (l > u)";
        return rep;
      }
      if (l == u) {
        rep.lambda = l;
        break;
      }
    }

    if (!rep.lambda) {
      rep.status = Status::Unresolved;
      rep.note = "round budget exhausted";
      return rep;
    }

    finalize(rep, a, t);
    if (rep.eigenvector_columns.empty() && config.extract_certificate) {
      std::optional<Certificate> c = extract_certificate(a, t, *rep.lambda, d, config, deadline);
      if (!c) {
        rep.status = Status::Failed;
        rep.note = "equalities of certified arcs at the obtained eigenvalue empty the zone";
        return rep;
      }
      rep.refined_dbm = std::move(c->dbm);
      rep.certificate_phase_used = c->changed;
      finalize(rep, a, t);
    }
    rep.status = rep.eigenvector_columns.empty() ? Status::Conjectured : Status::Solved;
  } catch (const TimeLimitReached&) {
    rep.status = Status::Unresolved;
    rep.lambda.reset();
    rep.eigenvector.reset();
    rep.eigenvector_columns.clear();
    rep.note = "time limit reached";
  } catch (const IterationBudgetExceeded& e) {
    rep.status = Status::Unresolved;
    rep.lambda.reset();
    rep.eigenvector.reset();
    rep.eigenvector_columns.clear();
    rep.note = e.what();
  }
  return rep;
}

Vector classical_eigenvector(const Matrix& a, CycleMode mode) {
  if (!a.all_finite()) throw Error("classical eigenvector needs a finite matrix");
  if (mode == CycleMode::Min) {
    Vector x = classical_eigenvector(a.negated(), CycleMode::Max);
    for (auto& v : x) v = -v;
    return x;
  }
  const CycleMeanResult cm = cycle_mean(a, CycleMode::Max);
  const std::size_t n = a.n();
  // I ⊕ (A − λ): every loop weight is at most λ, so the diagonal becomes 0.
  Matrix normalized(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) normalized(i, j) = a(i, j) - cm.value;
  for (std::size_t i = 0; i < n; ++i) normalized(i, i) = ExtScalar(0);
  return kleene_star(normalized).column(cm.witness_cycle.front());
}

SolveReport solve(const Matrix& a, const Threshold& t, const SolveConfig& config) {
  if (a.n() == 0 || a.n() != t.n()) {
    throw InvalidThreshold("threshold n=" + std::to_string(t.n()) + " does not match matrix size " +
                           std::to_string(a.n()));
  }
  if (!a.all_finite()) throw Error("problem matrix must have finite entries");

  Deadline deadline;
  if (config.time_limit) deadline = std::chrono::steady_clock::now() + *config.time_limit;

  SolveReport rep;
  rep.n = a.n();
  rep.p = t.p();
  StabilizeResult st;
  try {
    st = stabilize(a, t, config.max_iters, deadline);
  } catch (const TimeLimitReached&) {
    rep.status = Status::Unresolved;
    rep.note = "time limit reached during stabilization";
    return rep;
  } catch (const IterationBudgetExceeded& e) {
    rep.status = Status::Unresolved;
    rep.note = e.what();
    return rep;
  }
  if (!st.dbm) {
    rep.status = Status::Failed;
    rep.note = "stabilized zone is empty";
    return rep;
  }

  const BoundMatrices b = compute_bounds(a, *st.dbm, t);
  const ActiveStructure s = classify_entries(a, b);

  if (t.p() == 1 || t.p() == t.n()) {
    const CycleMode mode = t.p() == t.n() ? CycleMode::Max : CycleMode::Min;
    rep.stabilized_dbm = *st.dbm;
    rep.refined_dbm = *st.dbm;
    rep.initial_bounds = b;
    rep.initial_active = s;
    rep.lambda = cycle_mean(a, mode).value;
    Vector x = classical_eigenvector(a, mode);
    const bool ok = verify_eigenvector(a, t, *rep.lambda, x);
    if (ok) rep.eigenvector = std::move(x);
    finalize(rep, a, t);
    if (rep.eigenvector_columns.empty() && config.extract_certificate) {
      try {
        if (auto c = extract_certificate(a, t, *rep.lambda, rep.refined_dbm, config, deadline)) {
          rep.refined_dbm = std::move(c->dbm);
          rep.certificate_phase_used = c->changed;
          finalize(rep, a, t);
        }
      } catch (const Error&) {
        // The classical eigenvector is already a certificate.
      }
    }
    rep.status = ok ? Status::Solved : Status::Failed;
    if (!ok) rep.note = "classical eigenvector failed verification";
    set_act_cycle_means(rep);
    return rep;
  }
  rep = refine(a, t, *st.dbm, s, b, config, deadline);
  set_act_cycle_means(rep);
  return rep;
}

}  // namespace maxmin
