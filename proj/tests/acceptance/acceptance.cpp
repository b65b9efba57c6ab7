// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "maxmin/bench.hpp"
#include "maxmin/eigensolver.hpp"
#include "support/examples.hpp"
#include "support/properties.hpp"

using namespace maxmin;
using namespace maxmin::testing;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void stabilization_example_values(Criterion& c) {
  const Matrix a = stabilization_example();
  const Threshold t(2, 4);
  const StabilizeResult r = stabilize(a, t);
  const std::vector<Matrix> printed{
      {{0, -5, -6, -5}, {-8, 0, -5, -5}, {-3, -1, 0, -1}, {-3, 0, -1, 0}},
      {{0, -1, -6, -5}, {-5, 0, -5, -5}, {0, 2, 0, -1}, {0, 1, -1, 0}},
      {{0, -1, -6, -5}, {-2, 0, -5, -5}, {2, 2, 0, -1}, {2, 1, -1, 0}},
      {{0, -1, -6, -5}, {-1, 0, -5, -5}, {2, 2, 0, -1}, {2, 1, -1, 0}},
  };
  c.check(r.trace.size() >= 5, "sequence has at least four iterates");
  for (std::size_t k = 0; k < printed.size() && k + 1 < r.trace.size(); ++k)
    c.check(r.trace[k + 1].matrix() == printed[k], "D^" + std::to_string(k + 1));
  c.check(r.dbm && r.dbm->matrix() == printed.back(), "stabilized DBM");
  if (!r.dbm) return;
  const BoundMatrices b = compute_bounds(a, *r.dbm, t);
  c.check(b.L == Matrix{{4, 3, 1, 2}, {4, 4, 2, 1}, {8, 9, 4, 4}, {9, 8, 3, 4}}, "L");
  c.check(b.U == Matrix{{7, 7, 3, 2}, {8, 7, 2, 3}, {10, 9, 7, 8}, {9, 10, 7, 7}}, "U");
  c.check(b.l == ExtScalar(4) && b.u == ExtScalar(7), "4 <= lambda <= 7");
}

void refinement_example_values(Criterion& c) {
  const Matrix a = refinement_example();
  const Threshold t(2, 4);
  const SolveReport r = solve(a, t);
  c.check(r.stabilized_dbm.matrix() == Matrix{{0, 6, 3, -5}, {-12, 0, -7, -11}, {-5, 1, 0, -10}, {-1, 11, 4, 0}},
          "stabilized DBM");
  const BoundMatrices& b = r.initial_bounds;
  c.check(b.L == Matrix{{4, 16, 9, 5}, {-2, 4, 3, -7}, {1, 11, 4, 0}, {9, 15, 14, 4}}, "L");
  c.check(b.U == Matrix{{10, 16, 15, 5}, {0, 10, 3, -1}, {5, 13, 10, 2}, {11, 21, 14, 10}}, "U");
  c.check(b.P == Matrix{{14, -10, 13, 4}, {11, 2, 4, 25}, {4, 6, 12, 4}, {14, -5, 4, 12}}, "P");
  c.check(b.Q == Matrix{{14, -4, 15, 10}, {17, 2, 10, 25}, {6, 12, 12, 10}, {20, -5, 10, 12}}, "Q");
  c.check(b.l == ExtScalar(4) && b.u == ExtScalar(10), "l = 4, u = 10");
  c.check(r.initial_active.A_hat == Matrix{{kPosInf, kPosInf, kPosInf, 5},
                                           {kPosInf, kPosInf, 3, kPosInf},
                                           {1, 13, kPosInf, 0},
                                           {kPosInf, kPosInf, 14, kPosInf}},
          "possibly active matrix");
  c.check(r.initial_active.act.arcs == std::vector<Arc>{{0, 3}, {1, 2}, {3, 2}},
          "certified entries (1,4), (2,3), (4,3)");
  c.check(!r.iterations.empty() && r.iterations[0].m == ExtScalar(7), "m = 7 in round 1");
  c.check(r.refined_dbm.matrix() == Matrix{{0, 9, 5, -2}, {-9, 0, -4, -11}, {-5, 4, 0, -7}, {2, 11, 7, 0}},
          "refined DBM");
  c.check(r.lambda == ExtScalar(7) && r.status == Status::Solved, "lambda = 7, Solved");
  c.check(verify_eigenvector(a, t, 7, r.refined_dbm.matrix().column(0)), "column 1 is an eigenvector");
}

void multiple_columns_values(Criterion& c) {
  const Matrix a = multiple_columns_example();
  const Threshold t(2, 4);
  const SolveReport r = solve(a, t);
  const Matrix dbar{{0, -4, -5, -2}, {-9, 0, -10, 2}, {1, 1, 0, 3}, {-11, -2, -12, 0}};
  c.check(r.lambda == ExtScalar(4), "lambda = 4");
  c.check(r.refined_dbm.matrix() == dbar, "refined DBM");
  c.check(r.active.T == Matrix{{4, kPosInf, kPosInf, kPosInf},
                               {kPosInf, 4, kPosInf, kPosInf},
                               {kPosInf, kPosInf, kPosInf, kPosInf},
                               {kPosInf, 2, kPosInf, kPosInf}},
          "strongly active matrix");
  c.check(r.active.A_hat == Matrix{{4, kPosInf, kPosInf, kPosInf},
                                   {kPosInf, 4, kPosInf, kPosInf},
                                   {5, 14, kPosInf, 7},
                                   {kPosInf, 2, kPosInf, kPosInf}},
          "possibly active matrix");
  for (std::size_t j : {0, 1, 3})
    c.check(verify_eigenvector(a, t, 4, dbar.column(j)), "column " + std::to_string(j + 1) + " verifies");
  c.check(!verify_eigenvector(a, t, 4, dbar.column(2)), "column 3 fails");
  Matrix residual = omega_matmul(a, dbar, t);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) residual(i, j) -= dbar(i, j);
  c.check(residual == Matrix{{4, 4, 4, 4}, {4, 4, 4, 4}, {4, 4, 0, 4}, {4, 4, 4, 4}}, "residual matrix");
  Vector combo(4);
  for (std::size_t i = 0; i < 4; ++i) combo[i] = std::min(dbar(i, 0) - 1, dbar(i, 1) - 1);
  c.check(combo == dbar.column(2), "column 3 = min((-1) + column 1, (-1) + column 2)");
}

void eigenspace_values(Criterion& c) {
  const Matrix a = eigenspace_example();
  const Threshold t(2, 3);
  for (long s = 0; s <= 4; ++s) {
    const Vector x{s, 1, 0};
    c.check(verify_eigenvector(a, t, 4, x), "accepts t = " + std::to_string(s));
    const Digraph sat = saturation_graph(a, t, x);
    c.check(sat.has_arc(1, 2) && sat.has_arc(2, 1), "Sat contains the cycle (2,3) for t = " + std::to_string(s));
  }
  for (long s : {-1, 5}) c.check(!verify_eigenvector(a, t, 4, Vector{s, 1, 0}), "rejects t = " + std::to_string(s));
}

void kleene_star_values(Criterion& c) {
  const auto z = canonicalize(Dbm(Matrix{{0, -2, 2}, {-4, 0, 0}, {-3, -1, 0}}));
  c.check(z && z->matrix() == Matrix{{0, 1, 2}, {-3, 0, 0}, {-3, -1, 0}}, "closure");
}

void bench_values(Criterion& c) {
  BenchConfig cfg;
  cfg.sizes = {5, 6, 7};
  cfg.count = 20;
  cfg.low = 0;
  cfg.high = 100;
  cfg.seed = 2024;
  const BenchReport r = run_bench(cfg);
  std::fputs(bench_table(r).c_str(), stdout);
  c.check(r.cells.size() == 3 + 4 + 5, "one cell per (n, p) with 2 <= p <= n-1");
  for (const CellSummary& cell : r.cells) {
    const std::string tag = "n=" + std::to_string(cell.n) + " p=" + std::to_string(cell.p);
    c.check(cell.count == 20, tag + ": 20 instances");
    c.check(cell.success_rate() >= 0.95, tag + ": success rate >= 95%");
    std::size_t solved_agree = 0;
    for (const InstanceResult& i : r.instances)
      if (i.n == cell.n && i.p == cell.p && i.status == Status::Solved && i.oracle_lambda && *i.oracle_lambda == *i.lambda)
        ++solved_agree;
    c.check(solved_agree == cell.solved, tag + ": oracle agrees on every Solved instance");
    c.check(cell.column_hits == cell.solved, tag + ": a refined column verifies on every Solved instance");
  }
  for (const InstanceResult& i : r.instances)
    if (i.status == Status::Solved && i.verified_columns == 0)
      std::printf("  column conjecture counterexample: n=%zu p=%zu index=%zu\n", i.n, i.p, i.index);
}

void property_values(Criterion& c) {
  for (const Property& p : properties()) {
    if (!p.acceptance) continue;
    const auto start = Clock::now();
    const PropertyOutcome r = p.run(p.seed, p.cases);
    std::printf("  %-30s %6zu cases  %zu failures  %.2f s\n", r.name.c_str(), r.cases, r.failures, seconds_since(start));
    c.check(r.cases >= 1000, r.name + ": at least 1000 cases");
    c.check(r.failures == 0, r.name + ": " + r.first_failure);
  }
}

struct Entry {
  int id;
  const char* title;
  std::function<void(Criterion&)> run;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Entry> entries{
      {1, "stabilization example: D^1..D^4, stabilized DBM, L, U, 4 <= lambda <= 7", stabilization_example_values, 1},
      {2, "refinement example: bounds, P, Q, A_hat, m = 7, refined DBM, lambda = 7", refinement_example_values, 1},
      {3, "several eigenvector columns: lambda = 4, T, A_hat, residual, column 3", multiple_columns_values, 1},
      {4, "3x3 eigenspace: [t,1,0] accepted for 0 <= t <= 4, Sat contains (2,3)", eigenspace_values, 1},
      {5, "Kleene star closure of a 3x3 DBM", kleene_star_values, 1},
      {6, "bench n = 5,6,7: success >= 95%, oracle and column hits 100% on Solved", bench_values, 600},
      {7, "property suites, >= 1000 randomized cases each", property_values, 1e9},
  };
  bool all = true;
  for (const Entry& e : entries) {
    Criterion c;
    const auto start = Clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = seconds_since(start);
    c.check(secs < e.budget_seconds, "runtime " + std::to_string(secs) + " s within budget");
    std::printf("%s  criterion %d: %s (%zu checks, %.2f s)\n", c.passed() ? "PASS" : "FAIL", e.id, e.title,
                c.checks(), secs);
    for (const std::string& f : c.failures()) std::printf("      failed: %s\n", f.c_str());
    std::fflush(stdout);
    all = all && c.passed();
  }
  return all ? 0 : 1;
}
