#pragma once

// Multiobjective integer programs  v-max { Cx : Ax <= b, x >= 0, x integer }.
//
// Two exact generating-function solvers (digging and hyperbox search), a
// brute-force oracle, the dominance polytope P_C and re-optimization over the
// nondominated set.

#include "moilp/exactmath.hpp"
#include "moilp/genfun.hpp"
#include "moilp/polytope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moilp {

class MoilpProblem {
 public:
  /// Appends x_i >= 0 rows that are not already present. Throws
  /// UnboundedError for an unbounded region and std::invalid_argument on a
  /// dimension mismatch or an empty objective matrix.
  MoilpProblem(IntMatrix a, IntVector b, IntMatrix c, std::string name = {});

  [[nodiscard]] const HPolytope& polytope() const { return p_; }
  [[nodiscard]] const IntMatrix& objectives() const { return c_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return p_.dim(); }
  [[nodiscard]] std::size_t num_objectives() const { return c_.rows(); }

 private:
  HPolytope p_;
  IntMatrix c_;
  std::string name_;
};

/// Maximal complete set: points sorted lexicographically, values the sorted
/// distinct images Cx.
struct ParetoSet {
  std::vector<IntVector> points;
  std::vector<IntVector> values;

  friend bool operator==(const ParetoSet&, const ParetoSet&) = default;
};

/// Builds a ParetoSet from a list of nondominated points (any order, may
/// contain duplicates).
ParetoSet make_pareto_set(std::vector<IntVector> points, const IntMatrix& c);

/// Cx >= Cy componentwise with at least one strict inequality.
bool dominates(const IntVector& x, const IntVector& y, const IntMatrix& c);
/// Same relation on objective vectors.
bool dominates_value(const IntVector& cx, const IntVector& cy);

/// Keeps the points not dominated by any other point of the list.
std::vector<IntVector> nondominated_filter(std::vector<IntVector> points, const IntMatrix& c);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultLatticeBudget = 2'000'000;

/// Every lattice point of p, lexicographically ordered, by scanning its
/// lattice bounding box. Throws BudgetExceeded when the box holds more than
/// `budget` points.
std::vector<IntVector> enumerate_lattice_points(const HPolytope& p, std::uint64_t budget = kDefaultLatticeBudget);

ParetoSet brute_force_pareto(const MoilpProblem& prob, std::uint64_t budget = kDefaultLatticeBudget);

/// {(u, v) : u, v in P, Cu >= Cv, sum_i c_i u >= sum_i c_i v + 1} in R^{2n}.
HPolytope build_pc(const MoilpProblem& prob);

/// Whether some feasible u strictly dominates v, decided by counting the
/// lattice points of {u in P : Cu >= Cv, sum Cu >= sum Cv + 1}. Throws
/// std::invalid_argument when v is infeasible.
bool dominated_point_test(const IntVector& v, const MoilpProblem& prob);

struct DiggingBoundsOptions {
  /// Lower bound L on Cx for every monomial of interest (default 0).
  std::optional<IntVector> objective_lower;
  /// Restricts the z-exponent of a monomial to a box.
  std::optional<IntBox> z_box;
};

struct DiggingBounds {
  bool empty = false;
  IntVector lower;  // m_j
  IntVector upper;  // M_j
  /// prod (M_j - m_j + 1), 0 when empty.
  [[nodiscard]] BigInt volume() const;
};

/// Exact integer bounds of lambda over the rational relaxation of
/// { lambda >= 0 : C u + sum_r lambda_r C v_r >= L, u + sum_r lambda_r v_r in box }.
/// The term must be sign-normalized. Throws std::domain_error when the region
/// is unbounded.
DiggingBounds digging_bounds(const ObjGenFunTerm& term, const DiggingBoundsOptions& options = {});

struct DiggingOptions {
  bool pruning = true;
};

struct DiggingTermStats {
  BigInt bound_volume;
  std::uint64_t passes = 0;
  std::uint64_t max_pass_iterations = 0;
  std::uint64_t candidates = 0;
};

struct DiggingStats {
  std::vector<DiggingTermStats> terms;
  std::uint64_t infeasible_removed = 0;
  std::uint64_t requeued = 0;
  std::uint64_t net_checks = 0;
  std::uint64_t net_mismatches = 0;
  /// Every pass of every term stayed within its bound volume.
  bool within_bounds = true;
};

ParetoSet digging_solve(const MoilpProblem& prob, const DiggingOptions& options = {}, DiggingStats* stats = nullptr);

struct BoxSearchOptions {
  /// Nodes with at most this many feasible points are enumerated.
  std::uint64_t enumerate_threshold = 64;
  /// Root box [0, R]^n; R defaults to max_coordinate_bound.
  std::optional<BigInt> root_bound;
};

struct BoxSearchStats {
  IntBox root;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned_empty = 0;
  std::uint64_t pruned_bound = 0;
  std::uint64_t point_tests = 0;
  std::size_t max_depth = 0;
  std::size_t max_leaf_solutions = 0;
};

ParetoSet box_search_solve(const MoilpProblem& prob, const BoxSearchOptions& options = {}, BoxSearchStats* stats = nullptr);

struct Optimum {
  BigInt value;
  std::vector<IntVector> points;  // sorted
};

/// max c.x over the lattice points of p together with all maximizers. Throws
/// std::domain_error for an empty polytope.
Optimum solve_single_objective(const HPolytope& p, const IntVector& c);

/// max nu.x over the maximal complete set.
Optimum optimize_over_pareto(const MoilpProblem& prob, const IntVector& nu);
Optimum optimize_over_pareto(const ParetoSet& set, const IntVector& nu);

}  // namespace moilp
