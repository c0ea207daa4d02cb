#pragma once

// Short rational generating functions
//
//   f(z) = sum_i coeff_i * z^{u_i} / prod_j (1 - z^{v_ij})
//
// built from a polytope by Brion's vertex-cone decomposition and Barvinok's
// signed unimodular decomposition, together with the operations the
// multiobjective solvers need: exact counting at z -> 1, the objective
// substitution z_i -> z_i t^{C e_i}, sign normalization and truncated
// Laurent expansion.

#include "moilp/exactmath.hpp"
#include "moilp/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moilp {

struct GenFunTerm {
  BigRat coeff;
  IntVector num_exp;
  std::vector<IntVector> den_exps;  // every entry nonzero
};

class GenFun {
 public:
  explicit GenFun(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<GenFunTerm>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Throws std::invalid_argument on a dimension mismatch or a zero
  /// denominator exponent.
  void add(GenFunTerm term);

 private:
  std::size_t dim_;
  std::vector<GenFunTerm> terms_;
};

/// A term after z_i -> z_i t_1^{c_1i} ... t_k^{c_ki}: every exponent is split
/// into its z-part (length n) and t-part (length k).
struct ObjGenFunTerm {
  BigRat coeff;
  IntVector num_z;
  IntVector num_t;
  std::vector<IntVector> den_z;
  std::vector<IntVector> den_t;
};

struct ObjGenFun {
  std::size_t dim = 0;
  std::size_t num_objectives = 0;
  std::vector<ObjGenFunTerm> terms;
};

/// Solves origin + sum_j lambda_j dirs[j] = x for integer lambda, with the
/// directions linearly independent. Precomputes the left inverse once.
class LatticeCoordinates {
 public:
  LatticeCoordinates(IntVector origin, std::vector<IntVector> dirs);
  [[nodiscard]] std::optional<IntVector> solve(const IntVector& x) const;

 private:
  IntVector origin_;
  std::vector<IntVector> dirs_;
  std::vector<std::size_t> rows_;
  std::optional<RatMatrix> left_inverse_;
};

/// Per-step record of the signed decomposition: index before and after
/// replacing one generator by the short vector.
struct DecompositionTrace {
  std::vector<std::pair<BigInt, BigInt>> steps;
};

/// Signed decomposition of a simplicial cone into unimodular cones with the
/// same apex. Works on the polar cone, so the identity holds modulo cones
/// containing lines, whose generating functions vanish. Throws
/// std::logic_error if a step fails to decrease the index.
std::vector<SimplicialCone> barvinok_decompose(const SimplicialCone& c, DecompositionTrace* trace = nullptr);

/// z^u / prod (1 - z^{ray_j}) for a unimodular cone, u the unique lattice
/// point of apex + half-open fundamental parallelepiped (ceiling of the apex
/// in ray coordinates). Throws std::invalid_argument for index != 1.
GenFunTerm cone_genfun(const SimplicialCone& c);

/// Generating function of the lattice points of p. Lower-dimensional
/// polytopes are handled through their affine-hull lattice.
GenFun polytope_genfun(const HPolytope& p);
GenFun polytope_genfun(const HPolytope& p, const std::vector<Vertex>& vertices);

/// Exact number of lattice points encoded by g (the limit z -> 1).
BigInt count(const GenFun& g);

/// prod_i [ x_i^{lower_i} / (1 - x_i) + x_i^{upper_i} / (1 - x_i^{-1}) ].
/// Throws std::invalid_argument when some lower_i > upper_i.
GenFun box_genfun(const IntBox& box);

/// Throws std::invalid_argument when c.cols() != g.dim().
ObjGenFun substitute_objectives(const GenFun& g, const IntMatrix& c);

/// Flips every denominator factor whose first nonzero entry of (t-part,
/// z-part) is positive, using 1/(1-w) = -w^{-1}/(1-w^{-1}).
ObjGenFun normalize_signs(const ObjGenFun& g);

/// Exponent -> coefficient of a truncated Laurent expansion.
using Expansion = std::map<IntVector, BigRat>;

/// Expansion of g restricted to the box, one entry per box point. Each factor
/// is expanded as a geometric series in the direction where the first nonzero
/// entry of order * v is positive (order defaults to the identity, i.e. the
/// lexicographic order). For a polytope the result is its lattice indicator
/// whatever the order.
Expansion expand_truncated(const GenFun& g, const IntBox& box);
Expansion expand_truncated(const GenFun& g, const IntBox& box, const IntMatrix& order);

/// Expansion of the sign-normalized g for monomials whose z-part lies in the
/// box. Keys are the concatenation (z-part, t-part); only monomials that
/// receive a contribution are present (their net coefficient may be zero).
Expansion expand_truncated(const ObjGenFun& g, const IntBox& box);

/// One term per line: `coeff ; u ; v1 | v2 | ...`, vectors comma-separated.
std::string serialize(const GenFun& g);
/// Inverse of serialize. Blank lines and `#` comments are skipped. `dim` is
/// required to parse an empty function.
GenFun parse_genfun(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

}  // namespace moilp
