#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxmin/eigensolver.hpp"

namespace maxmin {

/// n×n matrix with independent uniform integer entries in [low, high].
Matrix random_matrix(std::size_t n, long low, long high, std::mt19937_64& rng);

struct BenchConfig {
  std::vector<std::size_t> sizes{5, 6, 7};
  /// Thresholds to run; empty means 2..n−1 for every n.
  std::vector<std::size_t> ps;
  std::size_t count = 20;
  long low = 0;
  long high = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::size_t oracle_max_steps = 100000;
  SolveConfig solve;
};

struct InstanceResult {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t index = 0;
  Status status = Status::Unresolved;
  std::optional<ExtScalar> lambda;
  std::optional<ExtScalar> oracle_lambda;
  std::size_t verified_columns = 0;
  std::size_t rounds = 0;
  bool certificate_phase_used = false;
  /// Findings of oracle::cross_check.
  std::vector<std::string> issues;
  double millis = 0;
};

struct CellSummary {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t count = 0;
  std::size_t solved = 0;
  std::size_t conjectured = 0;
  std::size_t unresolved = 0;
  std::size_t failed = 0;
  /// Among runs that produced λ: how many match power iteration.
  std::size_t with_lambda = 0;
  std::size_t oracle_agree = 0;
  /// Among Solved runs: how many have a verified column of the refined DBM.
  std::size_t column_hits = 0;
  /// Among runs that produced λ.
  std::size_t column_hits_with_lambda = 0;
  std::size_t certificate_phase = 0;
  double median_ms = 0;

  double success_rate() const;
  double oracle_agreement() const;
  double column_hit_rate() const;
};

struct BenchReport {
  BenchConfig config;
  std::vector<CellSummary> cells;
  std::vector<InstanceResult> instances;
};

/// Instances are generated from the seed independently of `threads`, so
/// everything except the timing fields is reproducible.
BenchReport run_bench(const BenchConfig& config);

/// Timing fields are "median_ms" and "millis"; everything else is deterministic.
nlohmann::json bench_to_json(const BenchReport& r, bool include_instances = false);
std::string bench_table(const BenchReport& r);

}  // namespace maxmin
