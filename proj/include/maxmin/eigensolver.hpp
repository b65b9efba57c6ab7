#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxmin/maxmin_omega.hpp"
#include "maxmin/zones.hpp"

namespace maxmin {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Digraph on nodes {0,…,n−1}; arcs kept in row-major order.
struct Digraph {
  std::size_t n = 0;
  std::vector<Arc> arcs;

  bool has_arc(std::size_t from, std::size_t to) const;
  /// True iff every arc of this graph is also in `other`.
  bool subgraph_of(const Digraph& other) const;
  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// Arcs (i,j) at the finite entries of m.
Digraph finite_entry_graph(const Matrix& m);

/// Graphviz text. Nodes are numbered 1..n, arcs are labelled with the entry
/// of `weights`, arcs also present in `bold` are drawn bold.
std::string to_dot(const Digraph& g, const Matrix& weights, const Digraph* bold = nullptr,
                   std::string_view name = "G");

// ---------------------------------------------------------------------------
// Zone sequence

/// D'(i,j) = MinMaxValue(D, A_i, A_j | p, n+1−p).
Dbm next_dbm(const Dbm& d, const Matrix& a, const Threshold& t);

struct StabilizeResult {
  /// The fixed point, or nullopt when a round lost strong definiteness.
  std::optional<Dbm> dbm;
  /// Every iterate, starting with the seed.
  std::vector<Dbm> trace;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Thrown internally when a Deadline passes; solve() turns it into Unresolved.
class TimeLimitReached : public Error {
 public:
  TimeLimitReached() : Error("time limit reached") {}
};

/// Iterates next_dbm from the max-plus identity until D^{k+1} = D^k.
/// Throws IterationBudgetExceeded after max_iters rounds.
StabilizeResult stabilize(const Matrix& a, const Threshold& t, std::size_t max_iters = 10000,
                          Deadline deadline = std::nullopt);

/// Over-approximates zone(seed) ∩ E_p(A). Each round replaces D by
/// (D ⊕ next_dbm(D))*, so the sequence is monotone, and stops with nullopt as
/// soon as the zone becomes empty.
StabilizeResult stabilize_from(const Matrix& a, const Threshold& t, const Dbm& seed,
                               std::size_t max_iters = 10000, Deadline deadline = std::nullopt);

// ---------------------------------------------------------------------------
// Bounds and entry classification

struct BoundMatrices {
  Matrix L;  ///< A ⊗_ω D̄
  Matrix U;  ///< A ⊗_ω (−D̄)ᵀ
  Matrix P;  ///< A + D̄ᵀ
  Matrix Q;  ///< A − D̄
  ExtScalar l;  ///< max_i L(i,i) ≤ λ_p
  ExtScalar u;  ///< λ_p ≤ min_i U(i,i)
  friend bool operator==(const BoundMatrices&, const BoundMatrices&) = default;
};

BoundMatrices compute_bounds(const Matrix& a, const Dbm& dbar, const Threshold& t);

struct ActiveStructure {
  /// Strongly active matrix: A(i,j) where A = L = U, +∞ otherwise.
  Matrix T;
  /// Possibly active matrix: +∞ where an inactivity test fired, A(i,j) otherwise.
  Matrix A_hat;
  Digraph act;
  Digraph pos;
  friend bool operator==(const ActiveStructure&, const ActiveStructure&) = default;
};

/// Certifies active entries (A = L = U) and eliminates inactive ones
/// (A < L, A > U, P > u, Q < l) using the scalar bounds stored in `b`.
ActiveStructure classify_entries(const Matrix& a, const BoundMatrices& b);

/// Row promotion: a row of T with a finite entry replaces the same row of
/// Â; a row of Â with a single finite entry is copied into T.
void promote_rows(ActiveStructure& s);

/// Arcs (i,j) with (A ⊗_ω x)_i = A(i,j) + x_j.
Digraph saturation_graph(const Matrix& a, const Threshold& t, std::span<const ExtScalar> x);

/// Exact check of A ⊗_ω x = λ + x.
bool verify_eigenvector(const Matrix& a, const Threshold& t, const ExtScalar& lambda,
                        std::span<const ExtScalar> x);

// ---------------------------------------------------------------------------
// Refinement and the full pipeline

enum class Status { Solved, Conjectured, Unresolved, Failed };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Which over-approximation survived a bisection round.
enum class Branch {
  Both,   ///< both nonempty: their meet is kept and λ = m is conjectured
  Lower,  ///< "λ ≥ m" side empty: λ < m
  Upper,  ///< "λ ≤ m" side empty: λ > m
  None,   ///< both empty
};

std::string_view to_string(Branch b);
Branch branch_from_string(std::string_view s);

struct RoundRecord {
  std::size_t round = 0;
  ExtScalar m;
  Branch branch = Branch::None;
  /// Bounds on λ_p after the round's update.
  ExtScalar l;
  ExtScalar u;
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct SolveConfig {
  std::size_t max_rounds = 64;
  std::size_t max_iters = 10000;
  std::optional<std::chrono::milliseconds> time_limit;
  /// When λ is known but no column of the refined DBM verifies, keep
  /// injecting the equalities of certified-active arcs at λ and
  /// re-stabilizing until a column verifies or nothing changes.
  bool extract_certificate = true;
};

struct SolveReport {
  std::size_t n = 0;
  std::size_t p = 0;
  Status status = Status::Unresolved;
  /// Present for Solved and Conjectured.
  std::optional<ExtScalar> lambda;
  Dbm stabilized_dbm;
  Dbm refined_dbm;
  /// Bounds and classification computed from the stabilized DBM.
  BoundMatrices initial_bounds;
  ActiveStructure initial_active;
  /// Bounds and classification for the refined DBM.
  BoundMatrices bounds;
  ActiveStructure active;
  /// Columns (0-based) of refined_dbm that pass verify_eigenvector with λ.
  std::vector<std::size_t> eigenvector_columns;
  /// A verified eigenvector; for p = 1 and p = n it comes from the classical
  /// Kleene star construction, otherwise it is the first verified column.
  std::optional<Vector> eigenvector;
  std::vector<RoundRecord> iterations;
  /// Extreme cycle means of the final Act graph (−∞ / +∞ when it is acyclic).
  /// λ is the only Act cycle mean when the two coincide.
  ExtScalar act_min_cycle_mean = ExtScalar::pos_inf();
  ExtScalar act_max_cycle_mean = ExtScalar::neg_inf();
  /// True when the certificate extraction phase changed the refined DBM.
  bool certificate_phase_used = false;
  std::string note;
  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Bisection refinement of a stabilized DBM.
SolveReport refine(const Matrix& a, const Threshold& t, const Dbm& stabilized,
                   const ActiveStructure& active, const BoundMatrices& bounds,
                   const SolveConfig& config = {}, Deadline deadline = std::nullopt);

/// Stabilization, bounds, classification and refinement. For p = 1 and p = n
/// the eigenvalue is the min/max cycle mean and no bisection runs.
SolveReport solve(const Matrix& a, const Threshold& t, const SolveConfig& config = {});

/// Classical max-plus eigenvector (p = n) or min-plus eigenvector (p = 1) of
/// an all-finite matrix, as a Kleene star column at a critical node.
Vector classical_eigenvector(const Matrix& a, CycleMode mode);

}  // namespace maxmin
