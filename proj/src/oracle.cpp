#include "maxmin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace maxmin::oracle {

OrbitRecord power_orbit(const Matrix& a, const Threshold& t, std::size_t max_steps, const Vector& x0) {
  if (!a.all_finite()) throw Error("power iteration needs a finite matrix");
  Vector x = x0.empty() ? Vector(a.n(), ExtScalar(0)) : x0;
  if (x.size() != a.n()) throw SizeMismatch("initial vector length does not match matrix");

  OrbitRecord orbit;
  std::map<Vector, std::size_t> first_seen;
  for (std::size_t k = 0; k <= max_steps; ++k) {
    const ExtScalar shift = x[0];
    Vector state = shifted(x, -shift);
    auto [it, inserted] = first_seen.emplace(state, k);
    orbit.states.push_back(std::move(state));
    orbit.shifts.push_back(shift);
    if (!inserted) {
      orbit.detected_period = std::make_pair(it->second, k);
      return orbit;
    }
    if (k == max_steps) break;
    x = omega_matvec(a, x, t);
  }
  return orbit;
}

std::optional<ExtScalar> power_lambda(const Matrix& a, const Threshold& t, std::size_t max_steps,
                                      const Vector& x0) {
  const OrbitRecord orbit = power_orbit(a, t, max_steps, x0);
  if (!orbit.detected_period) return std::nullopt;
  const auto [k1, k2] = *orbit.detected_period;
  return (orbit.shifts[k2] - orbit.shifts[k1]).divided_by(static_cast<long>(k2 - k1));
}

std::vector<SimpleCycle> enumerate_simple_cycles(const Matrix& a) {
  const std::size_t n = a.n();
  if (n > 10) throw DimensionTooLarge("cycle enumeration is limited to n <= 10");
  std::vector<SimpleCycle> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // Each cycle is listed once, rooted at its smallest node.
  std::function<void(std::size_t, std::size_t, ExtScalar)> extend =
      [&](std::size_t root, std::size_t node, ExtScalar weight) {
        for (std::size_t next = root; next < n; ++next) {
          if (!a(node, next).is_finite()) continue;
          if (next == root) {
            out.push_back({path, (weight + a(node, root)).divided_by(static_cast<long>(path.size()))});
          } else if (!on_path[next]) {
            path.push_back(next);
            on_path[next] = true;
            extend(root, next, weight + a(node, next));
            on_path[next] = false;
            path.pop_back();
          }
        }
      };
  for (std::size_t root = 0; root < n; ++root) {
    path = {root};
    on_path[root] = true;
    extend(root, root, ExtScalar(0));
    on_path[root] = false;
  }
  return out;
}

std::vector<ExtScalar> enumerate_cycle_means(const Matrix& a) {
  std::vector<ExtScalar> means;
  for (auto& c : enumerate_simple_cycles(a)) means.push_back(std::move(c.mean));
  std::sort(means.begin(), means.end());
  means.erase(std::unique(means.begin(), means.end()), means.end());
  return means;
}

std::vector<std::string> cross_check(const SolveReport& report, const Matrix& a, const Threshold& t,
                                     std::size_t max_steps) {
  return cross_check(report, a, t, power_lambda(a, t, max_steps));
}

std::vector<std::string> cross_check(const SolveReport& report, const Matrix& a, const Threshold& t,
                                     const std::optional<ExtScalar>& oracle_lambda) {
  std::vector<std::string> issues;
  if (!oracle_lambda) issues.push_back("power iteration timed out; eigenvalue not cross-checked");

  if (report.lambda && oracle_lambda && *report.lambda != *oracle_lambda) {
    issues.push_back("reported lambda " + report.lambda->to_string() + " differs from oracle " +
                     oracle_lambda->to_string());
  }
  if (report.status == Status::Solved && !report.lambda) {
    issues.push_back("Solved report carries no eigenvalue");
  }
  if (report.lambda) {
    for (std::size_t col : report.eigenvector_columns) {
      if (col >= report.refined_dbm.n() ||
          !verify_eigenvector(a, t, *report.lambda, report.refined_dbm.matrix().column(col))) {
        issues.push_back("claimed eigenvector column " + std::to_string(col + 1) + " does not verify");
      }
    }
    if (report.eigenvector && !verify_eigenvector(a, t, *report.lambda, *report.eigenvector)) {
      issues.push_back("claimed eigenvector does not verify");
    }
  }
  if (report.status == Status::Solved && report.eigenvector_columns.empty() && !report.eigenvector) {
    issues.push_back("Solved report has no verified eigenvector");
  }
  if (oracle_lambda && report.stabilized_dbm.n() == a.n() && a.n() > 0) {
    const auto& b = report.initial_bounds;
    if (b.L.n() == a.n() && (b.l > *oracle_lambda || *oracle_lambda > b.u)) {
      issues.push_back("oracle lambda " + oracle_lambda->to_string() + " outside initial bounds [" +
                       b.l.to_string() + ", " + b.u.to_string() + "]");
    }
    for (const RoundRecord& r : report.iterations) {
      if (r.l > *oracle_lambda || *oracle_lambda > r.u) {
        issues.push_back("oracle lambda " + oracle_lambda->to_string() + " outside bounds [" +
                         r.l.to_string() + ", " + r.u.to_string() + "] after round " +
                         std::to_string(r.round));
      }
    }
  }
  return issues;
}

}  // namespace maxmin::oracle
