#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxmin/bench.hpp"
#include "maxmin/io.hpp"

using namespace maxmin;

namespace {

constexpr int kInputError = 1;

struct Common {
  std::string matrix;
  long p = 0;
  std::size_t max_rounds = 64;
  std::size_t max_iters = 10000;
  long time_limit_ms = 0;
  bool json = false;
  bool table = false;
  std::string out;
};

void add_problem(CLI::App* cmd, Common& c) {
  cmd->add_option("--matrix", c.matrix, "matrix JSON file {\"n\":N,\"entries\":[[...]]}")->required();
  cmd->add_option("--p", c.p, "threshold p in [1, n]")->required();
}

void add_solver(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-rounds", c.max_rounds, "bisection rounds")->capture_default_str();
  cmd->add_option("--max-iters", c.max_iters, "stabilization iterations per call")->capture_default_str();
  cmd->add_option("--time-limit-ms", c.time_limit_ms, "wall-clock limit per solve (0 = none)");
}

void add_output(CLI::App* cmd, Common& c) {
  auto* j = cmd->add_flag("--json", c.json, "JSON output");
  auto* t = cmd->add_flag("--table", c.table, "human-readable output");
  j->excludes(t);
  cmd->add_option("--out", c.out, "write output to PATH instead of stdout");
}

SolveConfig solver_config(const Common& c) {
  SolveConfig cfg;
  cfg.max_rounds = c.max_rounds;
  cfg.max_iters = c.max_iters;
  if (c.time_limit_ms > 0) cfg.time_limit = std::chrono::milliseconds(c.time_limit_ms);
  return cfg;
}

Threshold threshold_for(long p, std::size_t n) {
  if (p < 1 || std::size_t(p) > n)
    throw InvalidThreshold("--p must lie in [1, " + std::to_string(n) + "], got " + std::to_string(p));
  return Threshold(std::size_t(p), n);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::string solve_table(const SolveReport& r) {
  std::ostringstream os;
  os << "status       " << to_string(r.status) << "\n";
  os << "lambda       " << (r.lambda ? r.lambda->to_string() : std::string("-")) << "\n";
  os << "bounds       [" << r.bounds.l << ", " << r.bounds.u << "]\n";
  os << "eigenvector  " << (r.eigenvector ? to_string(*r.eigenvector) : std::string("-")) << "\n";
  os << "columns     ";
  if (r.eigenvector_columns.empty()) os << " -";
  for (std::size_t c : r.eigenvector_columns) os << ' ' << c + 1;
  os << "\n";
  for (const RoundRecord& it : r.iterations)
    os << "round " << it.round << "      m=" << it.m << " " << to_string(it.branch) << " -> [" << it.l << ", "
       << it.u << "]\n";
  os << "stabilized DBM\n" << r.stabilized_dbm.matrix().to_string() << "\n";
  os << "refined DBM\n" << r.refined_dbm.matrix().to_string() << "\n";
  os << "T\n" << r.active.T.to_string() << "\n";
  os << "A_hat\n" << r.active.A_hat.to_string() << "\n";
  os << "Act cycle means [" << r.act_min_cycle_mean << ", " << r.act_max_cycle_mean << "]\n";
  if (!r.note.empty()) os << "note         " << r.note << "\n";
  return os.str();
}

int run_solve(const Common& c) {
  const Matrix a = io::read_matrix_file(c.matrix);
  const Threshold t = threshold_for(c.p, a.n());
  const SolveReport r = solve(a, t, solver_config(c));
  emit(c, c.table ? solve_table(r) : io::to_json(r).dump(2) + "\n");
  switch (r.status) {
    case Status::Solved: return 0;
    case Status::Conjectured: return 2;
    default: return 3;
  }
}

int run_verify(const Common& c, const std::string& lambda_text, const std::string& vector_text) {
  const Matrix a = io::read_matrix_file(c.matrix);
  const Threshold t = threshold_for(c.p, a.n());
  const ExtScalar lambda = ExtScalar::parse(lambda_text);
  const Vector x = io::parse_vector_list(vector_text);
  if (!lambda.is_finite()) throw ParseError("--lambda must be finite");
  if (x.size() != a.n())
    throw SizeMismatch("--vector has " + std::to_string(x.size()) + " entries, matrix has n = " +
                       std::to_string(a.n()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_finite()) throw ParseError("vector entry " + std::to_string(i + 1) + " must be finite");

  const Vector y = omega_matvec(a, x, t);
  const bool ok = verify_eigenvector(a, t, lambda, x);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const ExtScalar res = y[i] - lambda - x[i];
    rows.push_back(io::to_json(res));
    os << "row " << i + 1 << "  residual " << res << (res == ExtScalar(0) ? "" : "  MISMATCH") << "\n";
  }
  os << (ok ? "eigenvector verified" : "not an eigenvector") << "\n";
  if (c.json)
    emit(c, nlohmann::json{{"verified", ok}, {"lambda", lambda.to_string()}, {"residuals", rows}}.dump(2) + "\n");
  else
    emit(c, os.str());
  return ok ? 0 : 2;
}

int run_bench_cmd(const Common& c, BenchConfig cfg, bool instances) {
  if (cfg.count < 1) throw Error("--count must be at least 1");
  if (cfg.low > cfg.high) throw Error("--low must not exceed --high");
  cfg.solve = solver_config(c);
  if (c.p != 0) {
    if (c.p < 1) throw InvalidThreshold("--p must be positive");
    cfg.ps = {std::size_t(c.p)};
  }
  const BenchReport r = run_bench(cfg);
  emit(c, c.json ? bench_to_json(r, instances).dump(2) + "\n" : bench_table(r));
  return 0;
}

int run_graph(const Common& c, const std::string& which, const std::string& stage,
              const std::string& vector_text) {
  const Matrix a = io::read_matrix_file(c.matrix);
  const Threshold t = threshold_for(c.p, a.n());
  if (which == "sat") {
    if (vector_text.empty()) throw Error("graph sat requires --vector");
    const Vector x = io::parse_vector_list(vector_text);
    if (x.size() != a.n()) throw SizeMismatch("--vector length differs from n");
    emit(c, to_dot(saturation_graph(a, t, x), a, nullptr, "Sat"));
    return 0;
  }
  SolveConfig cfg = solver_config(c);
  if (stage == "stabilized") cfg.max_rounds = 0;
  const SolveReport r = solve(a, t, cfg);
  const ActiveStructure& s = stage == "stabilized" ? r.initial_active : r.active;
  emit(c, which == "act" ? to_dot(s.act, a, &s.act, "Act") : to_dot(s.pos, a, &s.act, "Pos"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxmin-omega eigenproblem solver over exact rationals"};
  app.require_subcommand(1);

  Common solve_opts, verify_opts, bench_opts, graph_opts;

  auto* solve_cmd = app.add_subcommand("solve", "compute lambda_p and a certified eigenvector");
  add_problem(solve_cmd, solve_opts);
  add_solver(solve_cmd, solve_opts);
  add_output(solve_cmd, solve_opts);

  std::string lambda_text, vector_text;
  auto* verify_cmd = app.add_subcommand("verify", "check A (x)_omega x = lambda + x exactly");
  add_problem(verify_cmd, verify_opts);
  verify_cmd->add_option("--lambda", lambda_text, "eigenvalue, e.g. 4 or 11/2")->required();
  verify_cmd->add_option("--vector", vector_text, "comma-separated entries, e.g. --vector=0,1,0")->required();
  add_output(verify_cmd, verify_opts);

  BenchConfig bench_cfg;
  bool bench_instances = false;
  auto* bench_cmd = app.add_subcommand("bench", "seeded random benchmark with oracle cross-check");
  bench_cmd->add_option("--sizes", bench_cfg.sizes, "matrix dimensions")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--p", bench_opts.p, "single threshold (default: every p in 2..n-1)");
  bench_cmd->add_option("--count", bench_cfg.count, "matrices per cell")->capture_default_str();
  bench_cmd->add_option("--low", bench_cfg.low, "smallest entry")->capture_default_str();
  bench_cmd->add_option("--high", bench_cfg.high, "largest entry")->capture_default_str();
  bench_cmd->add_option("--seed", bench_cfg.seed, "generator seed")->capture_default_str();
  bench_cmd->add_option("--threads", bench_cfg.threads, "worker threads")->capture_default_str();
  bench_cmd->add_flag("--instances", bench_instances, "include per-instance records in JSON");
  add_solver(bench_cmd, bench_opts);
  add_output(bench_cmd, bench_opts);

  std::string which, stage = "stabilized", graph_vector;
  auto* graph_cmd = app.add_subcommand("graph", "DOT export of the Sat, Act or Pos graph");
  add_problem(graph_cmd, graph_opts);
  add_solver(graph_cmd, graph_opts);
  graph_cmd->add_option("--which", which, "sat | act | pos")
      ->required()
      ->check(CLI::IsMember({"sat", "act", "pos"}));
  graph_cmd->add_option("--stage", stage, "act/pos from the stabilized or the refined DBM")
      ->check(CLI::IsMember({"stabilized", "refined"}))
      ->capture_default_str();
  graph_cmd->add_option("--vector", graph_vector, "point for sat, e.g. --vector=0,1,0");
  graph_cmd->add_option("--out", graph_opts.out, "write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opts);
    if (*verify_cmd) return run_verify(verify_opts, lambda_text, vector_text);
    if (*bench_cmd) return run_bench_cmd(bench_opts, bench_cfg, bench_instances);
    if (*graph_cmd) return run_graph(graph_opts, which, stage, graph_vector);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
