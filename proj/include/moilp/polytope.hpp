#pragma once

// H-representation polytopes and the cone geometry that feeds Brion's
// vertex-cone decomposition: vertex enumeration, tangent cones, cone
// triangulation and the affine-hull reduction for lower-dimensional input.

#include "moilp/exactmath.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace moilp {

/// Thrown when {x : Ax <= b} has a nonzero recession direction.
class UnboundedError : public std::runtime_error {
 public:
  explicit UnboundedError(IntVector direction);
  [[nodiscard]] const IntVector& direction() const { return direction_; }

 private:
  IntVector direction_;
};

/// {x in R^n : A x <= b} with integer data. Always bounded: the public
/// constructor verifies that the recession cone {d : A d <= 0} is {0}.
class HPolytope {
 public:
  HPolytope(IntMatrix a, IntVector b);

  /// Skips the boundedness check. Only for systems known to be bounded,
  /// e.g. rows added to an already bounded polytope.
  static HPolytope trusted(IntMatrix a, IntVector b);

  /// Intersection with extra rows; bounded because *this is.
  [[nodiscard]] HPolytope with_rows(const std::vector<IntVector>& rows, const IntVector& rhs) const;
  /// Intersection with the integer box prod [lower_i, upper_i].
  [[nodiscard]] HPolytope with_box(const IntVector& lower, const IntVector& upper) const;

  [[nodiscard]] std::size_t dim() const { return a_.cols(); }
  [[nodiscard]] std::size_t num_rows() const { return a_.rows(); }
  [[nodiscard]] const IntMatrix& a() const { return a_; }
  [[nodiscard]] const IntVector& b() const { return b_; }

  [[nodiscard]] bool contains(const IntVector& x) const;
  [[nodiscard]] bool contains(const RatVector& x) const;
  /// Rows i with a_i . x == b_i.
  [[nodiscard]] std::vector<std::size_t> tight_rows(const RatVector& x) const;

 private:
  struct Unchecked {};
  HPolytope(IntMatrix a, IntVector b, Unchecked);

  IntMatrix a_;
  IntVector b_;
};

struct Vertex {
  RatVector coords;
  std::vector<std::size_t> tight_rows;
};

/// All extreme points, lexicographically ordered; empty for an empty polytope.
std::vector<Vertex> enumerate_vertices(const HPolytope& p);

/// Integer bounding box of the lattice points: lower_i = ceil(min x_i),
/// upper_i = floor(max x_i) over the vertices. std::nullopt if empty.
struct IntBox {
  IntVector lower;
  IntVector upper;
  [[nodiscard]] std::size_t dim() const { return lower.size(); }
  [[nodiscard]] bool contains(const IntVector& x) const;
  /// Number of integer points, 0 if some interval is empty.
  [[nodiscard]] BigInt volume() const;
};
std::optional<IntBox> lattice_bounding_box(const std::vector<Vertex>& vertices);

/// R = ceil(max coordinate over all vertices). Throws std::domain_error for an
/// empty polytope.
BigInt max_coordinate_bound(const HPolytope& p);

/// Primitive extreme rays of the pointed cone {d : H d <= 0}, sorted
/// lexicographically. Empty when the cone is {0}.
std::vector<IntVector> extreme_rays(const IntMatrix& h);

/// A (not necessarily simplicial) cone apex + cone(rays).
struct Cone {
  RatVector apex;
  std::vector<IntVector> rays;
};

/// Tangent cone {v + d : A_tight d <= 0} described by its primitive extreme
/// rays. Throws std::invalid_argument when v is not a vertex of p.
Cone tangent_cone(const HPolytope& p, const Vertex& v);

/// apex + cone(rays) with n linearly independent primitive rays and a sign.
class SimplicialCone {
 public:
  SimplicialCone(RatVector apex, std::vector<IntVector> rays, int sign = 1);

  [[nodiscard]] const RatVector& apex() const { return apex_; }
  [[nodiscard]] const std::vector<IntVector>& rays() const { return rays_; }
  [[nodiscard]] int sign() const { return sign_; }
  [[nodiscard]] std::size_t dim() const { return rays_.size(); }

  /// Ray matrix with the rays as columns.
  [[nodiscard]] IntMatrix ray_matrix() const;
  /// |det(ray matrix)|, the lattice index of the cone.
  [[nodiscard]] BigInt index() const;
  /// Whether apex + cone(rays) contains x (closed cone).
  [[nodiscard]] bool contains(const IntVector& x) const;

 private:
  RatVector apex_;
  std::vector<IntVector> rays_;
  int sign_;
};

/// Placing triangulation of a pointed full-dimensional cone, rays inserted in
/// lexicographic order. Every piece has sign +1. Throws std::invalid_argument
/// for a non-pointed or lower-dimensional cone.
std::vector<SimplicialCone> triangulate_cone(const RatVector& apex, const std::vector<IntVector>& rays);

/// A simplicial piece with some facets removed. Facet i is the one opposite
/// ray i.
struct HalfOpenCone {
  SimplicialCone cone;
  std::vector<bool> open_facet;
  [[nodiscard]] bool contains(const IntVector& x) const;
};

/// Triangulation whose half-open pieces partition the cone: a shared facet is
/// kept by the piece entered when moving from it towards an interior point of
/// the cone perturbed in the lexicographic direction (e_1, e_2, ...).
std::vector<HalfOpenCone> half_open_triangulation(const RatVector& apex, const std::vector<IntVector>& rays);

/// Lattice parametrization of a lower-dimensional polytope.
/// The lattice points of p are exactly { lattice.offset + sum_j y_j basis[j] :
/// y in reduced }, and `reduced` is full-dimensional in R^d, d = basis.size().
struct AffineReduction {
  AffineLattice lattice;
  std::optional<HPolytope> reduced;  // absent when d == 0
};

/// Detects implicit equalities from the vertex set and parametrizes the
/// integer points of the affine hull. std::nullopt when p has no lattice
/// points in its affine hull (or p is empty). When p is already
/// full-dimensional the lattice is the identity with zero offset and
/// `reduced` is p itself.
std::optional<AffineReduction> reduce_affine_hull(const HPolytope& p, const std::vector<Vertex>& vertices);

}  // namespace moilp
