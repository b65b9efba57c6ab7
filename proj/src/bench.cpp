#include "maxmin/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "maxmin/oracle.hpp"

namespace maxmin {

Matrix random_matrix(std::size_t n, long low, long high, std::mt19937_64& rng) {
  if (low > high) throw Error("random_matrix: low > high");
  std::uniform_int_distribution<long> dist(low, high);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ExtScalar(dist(rng));
  return a;
}

namespace {

double ratio(std::size_t num, std::size_t den) { return den == 0 ? 1.0 : double(num) / double(den); }

struct Task {
  std::size_t n, p, index;
  const Matrix* a;
};

InstanceResult run_one(const Task& task, const BenchConfig& config) {
  const Threshold t(task.p, task.n);
  InstanceResult r;
  r.n = task.n;
  r.p = task.p;
  r.index = task.index;
  const auto start = std::chrono::steady_clock::now();
  const SolveReport report = solve(*task.a, t, config.solve);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.status = report.status;
  r.lambda = report.lambda;
  r.verified_columns = report.eigenvector_columns.size();
  r.rounds = report.iterations.size();
  r.certificate_phase_used = report.certificate_phase_used;
  r.oracle_lambda = oracle::power_lambda(*task.a, t, config.oracle_max_steps);
  r.issues = oracle::cross_check(report, *task.a, t, r.oracle_lambda);
  return r;
}

}  // namespace

double CellSummary::success_rate() const { return ratio(solved, count); }
double CellSummary::oracle_agreement() const { return ratio(oracle_agree, with_lambda); }
double CellSummary::column_hit_rate() const { return ratio(column_hits, solved); }

BenchReport run_bench(const BenchConfig& config) {
  std::map<std::size_t, std::vector<Matrix>> matrices;
  std::vector<Task> tasks;
  for (std::size_t n : config.sizes) {
    std::seed_seq seq{config.seed, std::uint64_t(n)};
    std::mt19937_64 rng(seq);
    auto& ms = matrices[n];
    for (std::size_t k = 0; k < config.count; ++k) ms.push_back(random_matrix(n, config.low, config.high, rng));
  }
  for (std::size_t n : config.sizes) {
    std::vector<std::size_t> ps = config.ps;
    if (ps.empty())
      for (std::size_t p = 2; p + 1 <= n; ++p) ps.push_back(p);
    for (std::size_t p : ps) {
      if (p < 1 || p > n) continue;
      for (std::size_t k = 0; k < config.count; ++k) tasks.push_back({n, p, k, &matrices[n][k]});
    }
  }

  BenchReport report{config, {}, std::vector<InstanceResult>(tasks.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) report.instances[k] = run_one(tasks[k], config);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t k = 0; k < tasks.size();) {
    CellSummary cell;
    cell.n = tasks[k].n;
    cell.p = tasks[k].p;
    std::vector<double> times;
    for (; k < tasks.size() && tasks[k].n == cell.n && tasks[k].p == cell.p; ++k) {
      const InstanceResult& r = report.instances[k];
      ++cell.count;
      times.push_back(r.millis);
      switch (r.status) {
        case Status::Solved: ++cell.solved; break;
        case Status::Conjectured: ++cell.conjectured; break;
        case Status::Unresolved: ++cell.unresolved; break;
        case Status::Failed: ++cell.failed; break;
      }
      if (r.certificate_phase_used) ++cell.certificate_phase;
      if (r.lambda) {
        ++cell.with_lambda;
        if (r.oracle_lambda && *r.oracle_lambda == *r.lambda) ++cell.oracle_agree;
        if (r.verified_columns > 0) ++cell.column_hits_with_lambda;
      }
      if (r.status == Status::Solved && r.verified_columns > 0) ++cell.column_hits;
    }
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size();
    cell.median_ms = m == 0 ? 0 : (m % 2 ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2);
    report.cells.push_back(cell);
  }
  return report;
}

nlohmann::json bench_to_json(const BenchReport& r, bool include_instances) {
  using nlohmann::json;
  json cells = json::array();
  for (const CellSummary& c : r.cells) {
    cells.push_back({{"n", c.n},
                     {"p", c.p},
                     {"count", c.count},
                     {"solved", c.solved},
                     {"conjectured", c.conjectured},
                     {"unresolved", c.unresolved},
                     {"failed", c.failed},
                     {"success_rate", c.success_rate()},
                     {"with_lambda", c.with_lambda},
                     {"oracle_agree", c.oracle_agree},
                     {"oracle_agreement", c.oracle_agreement()},
                     {"column_hits", c.column_hits},
                     {"column_hit_rate", c.column_hit_rate()},
                     {"column_hits_with_lambda", c.column_hits_with_lambda},
                     {"certificate_phase", c.certificate_phase},
                     {"median_ms", c.median_ms}});
  }
  json out = {{"config",
               {{"sizes", r.config.sizes},
                {"count", r.config.count},
                {"low", r.config.low},
                {"high", r.config.high},
                {"seed", r.config.seed},
                {"max_rounds", r.config.solve.max_rounds},
                {"max_iters", r.config.solve.max_iters}}},
              {"cells", cells}};
  json issues = json::array();
  for (const InstanceResult& i : r.instances) {
    // Column hits are a conjecture; a Solved run without one is a counterexample.
    if (!i.issues.empty() || (i.status == Status::Solved && i.verified_columns == 0))
      issues.push_back({{"n", i.n}, {"p", i.p}, {"index", i.index}, {"status", to_string(i.status)},
                        {"issues", i.issues}});
  }
  out["counterexamples"] = issues;
  if (include_instances) {
    json all = json::array();
    for (const InstanceResult& i : r.instances)
      all.push_back({{"n", i.n},
                     {"p", i.p},
                     {"index", i.index},
                     {"status", to_string(i.status)},
                     {"lambda", i.lambda ? json(i.lambda->to_string()) : json(nullptr)},
                     {"oracle_lambda", i.oracle_lambda ? json(i.oracle_lambda->to_string()) : json(nullptr)},
                     {"verified_columns", i.verified_columns},
                     {"rounds", i.rounds},
                     {"certificate_phase_used", i.certificate_phase_used},
                     {"millis", i.millis}});
    out["instances"] = all;
  }
  return out;
}

std::string bench_table(const BenchReport& r) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%3s %3s %5s %8s %8s %8s %8s %8s %10s\n", "n", "p", "runs", "solved",
                "success", "oracle", "colhit", "cert", "median_ms");
  os << line;
  for (const CellSummary& c : r.cells) {
    std::snprintf(line, sizeof line, "%3zu %3zu %5zu %8zu %7.1f%% %7.1f%% %7.1f%% %8zu %10.2f\n", c.n, c.p,
                  c.count, c.solved, 100 * c.success_rate(), 100 * c.oracle_agreement(),
                  100 * c.column_hit_rate(), c.certificate_phase, c.median_ms);
    os << line;
  }
  return os.str();
}

}  // namespace maxmin
