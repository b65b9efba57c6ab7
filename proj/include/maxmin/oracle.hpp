#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxmin/eigensolver.hpp"

namespace maxmin::oracle {

/// Orbit of x(k+1) = A ⊗_ω x(k), stored normalized by the first component.
struct OrbitRecord {
  std::vector<Vector> states;  ///< x(k) − x_1(k)
  std::vector<ExtScalar> shifts;  ///< x_1(k)
  /// (k1, k2) with k1 < k2 and equal normalized states.
  std::optional<std::pair<std::size_t, std::size_t>> detected_period;
};

/// Runs the orbit from x0 (all zeros when empty) until a normalized state
/// repeats or max_steps is reached.
OrbitRecord power_orbit(const Matrix& a, const Threshold& t, std::size_t max_steps,
                        const Vector& x0 = {});

/// Eigenvalue as the average growth over a detected period, or nullopt on
/// timeout. Never returns a value it has not observed on an exact repeat.
std::optional<ExtScalar> power_lambda(const Matrix& a, const Threshold& t,
                                      std::size_t max_steps = 100000, const Vector& x0 = {});

struct SimpleCycle {
  std::vector<std::size_t> nodes;
  ExtScalar mean;
};

/// Every simple cycle of the complete digraph weighted by A (n ≤ 10).
std::vector<SimpleCycle> enumerate_simple_cycles(const Matrix& a);

/// Distinct simple-cycle means, sorted ascending.
std::vector<ExtScalar> enumerate_cycle_means(const Matrix& a);

/// Re-checks a solver report independently. Empty result means clean.
std::vector<std::string> cross_check(const SolveReport& report, const Matrix& a, const Threshold& t,
                                     std::size_t max_steps = 100000);

/// Same, against an already computed power-iteration eigenvalue.
std::vector<std::string> cross_check(const SolveReport& report, const Matrix& a, const Threshold& t,
                                     const std::optional<ExtScalar>& oracle_lambda);

}  // namespace maxmin::oracle
