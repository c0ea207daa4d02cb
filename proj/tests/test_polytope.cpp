#include "moilp/polytope.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace moilp;

namespace {

HPolytope unit_square() { return HPolytope(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, int_vector({1, 1, 0, 0})); }

HPolytope fig1() {
  return HPolytope(IntMatrix{{1, 1}, {1, -2}, {-1, -1}, {-1, 0}, {0, 1}, {0, -1}}, int_vector({5, 2, -2, -1, 3, 0}));
}

std::vector<RatVector> coords(const std::vector<Vertex>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs) out.push_back(v.coords);
  return out;
}

// Vertices by brute force over all n-subsets of rows.
std::vector<RatVector> vertices_by_subsets(const HPolytope& p) {
  const std::size_t m = p.num_rows(), n = p.dim();
  std::vector<RatVector> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<IntVector> rows;
    IntVector rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        rows.push_back(p.a().row(i));
        rhs.push_back(p.b()[i]);
      }
    auto x = solve_linear(RatMatrix(IntMatrix(rows)), to_rat(rhs));
    if (x && p.contains(*x)) out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(HPolytope, RejectsUnbounded) {
  try {
    HPolytope(IntMatrix{{-1, 0}, {0, -1}}, int_vector({0, 0}));
    FAIL() << "expected UnboundedError";
  } catch (const UnboundedError& e) {
    const IntVector& d = e.direction();
    EXPECT_FALSE(is_zero(d));
    EXPECT_GE(d[0], 0);
    EXPECT_GE(d[1], 0);
  }
}

TEST(HPolytope, ContainsAndTightRows) {
  const HPolytope p = fig1();
  EXPECT_TRUE(p.contains(int_vector({2, 3})));
  EXPECT_FALSE(p.contains(int_vector({3, 3})));
  EXPECT_EQ(p.tight_rows(to_rat(int_vector({2, 3}))), (std::vector<std::size_t>{0, 4}));
}

TEST(Vertices, UnitSquare) {
  auto vs = enumerate_vertices(unit_square());
  EXPECT_EQ(coords(vs), (std::vector<RatVector>{to_rat(int_vector({0, 0})), to_rat(int_vector({0, 1})),
                                                 to_rat(int_vector({1, 0})), to_rat(int_vector({1, 1}))}));
}

TEST(Vertices, Simplex) {
  HPolytope p(IntMatrix{{1, 1}, {-1, 0}, {0, -1}}, int_vector({1, 0, 0}));
  EXPECT_EQ(enumerate_vertices(p).size(), 3u);
}

TEST(Vertices, Fig1) {
  auto vs = coords(enumerate_vertices(fig1()));
  EXPECT_EQ(vs.size(), 5u);
  EXPECT_EQ(vs, vertices_by_subsets(fig1()));
  EXPECT_NE(std::find(vs.begin(), vs.end(), to_rat(int_vector({2, 3}))), vs.end());
  EXPECT_NE(std::find(vs.begin(), vs.end(), to_rat(int_vector({4, 1}))), vs.end());
}

TEST(Vertices, EmptyPolytope) {
  HPolytope p(IntMatrix{{1}, {-1}}, int_vector({1, -2}));
  EXPECT_TRUE(enumerate_vertices(p).empty());
}

TEST(Vertices, RandomAgainstSubsetEnumeration) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + it % 3;
    const auto s = oracle::random_system(rng, n, 2 + it % 3, 4);
    const HPolytope p(oracle::to_matrix(s.a), oracle::to_int(s.b));
    EXPECT_EQ(coords(enumerate_vertices(p)), vertices_by_subsets(p));
  }
}

TEST(Vertices, LargeCoefficientsFallBackToExactPath) {
  const BigInt big("123456789012345678901");
  IntMatrix a{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}};
  a(4, 0) = big;
  const HPolytope p(a, IntVector{BigInt(3), BigInt(3), BigInt(0), BigInt(0), big + 2});
  EXPECT_EQ(coords(enumerate_vertices(p)), vertices_by_subsets(p));
}

TEST(TangentCone, UnitSquareCorners) {
  const HPolytope p = unit_square();
  const auto vs = enumerate_vertices(p);
  EXPECT_EQ(tangent_cone(p, vs.front()).rays, (std::vector<IntVector>{int_vector({0, 1}), int_vector({1, 0})}));
  EXPECT_EQ(tangent_cone(p, vs.back()).rays, (std::vector<IntVector>{int_vector({-1, 0}), int_vector({0, -1})}));
}

TEST(TangentCone, Fig1AtTwoThree) {
  const HPolytope p = fig1();
  for (const auto& v : enumerate_vertices(p))
    if (v.coords == to_rat(int_vector({2, 3})))
      EXPECT_EQ(tangent_cone(p, v).rays, (std::vector<IntVector>{int_vector({-1, 0}), int_vector({1, -1})}));
}

TEST(TangentCone, RejectsNonVertex) {
  const HPolytope p = unit_square();
  EXPECT_THROW(tangent_cone(p, Vertex{RatVector{make_rat(1, 2), BigRat(0)}, {}}), std::invalid_argument);
}

TEST(MaxCoordinateBound, Examples) {
  EXPECT_EQ(max_coordinate_bound(unit_square()), 1);
  EXPECT_EQ(max_coordinate_bound(HPolytope(IntMatrix{{1}, {-1}}, int_vector({4, 0}))), 4);
  EXPECT_EQ(max_coordinate_bound(fig1()), 4);
}

TEST(LatticeBoundingBox, Fig1) {
  auto box = lattice_bounding_box(enumerate_vertices(fig1()));
  ASSERT_TRUE(box);
  EXPECT_EQ(box->lower, int_vector({1, 0}));
  EXPECT_EQ(box->upper, int_vector({4, 3}));
  EXPECT_EQ(box->volume(), 16);
}

TEST(ExtremeRays, Quadrant) {
  EXPECT_EQ(extreme_rays(IntMatrix{{-1, 0}, {0, -1}}), (std::vector<IntVector>{int_vector({0, 1}), int_vector({1, 0})}));
  EXPECT_THROW(extreme_rays(IntMatrix{{1, 0}}), std::invalid_argument);
}

TEST(SimplicialCone, IndexAndContains) {
  SimplicialCone c(to_rat(int_vector({0, 0})), {int_vector({1, 0}), int_vector({1, 2})});
  EXPECT_EQ(c.index(), 2);
  EXPECT_TRUE(c.contains(int_vector({3, 2})));
  EXPECT_FALSE(c.contains(int_vector({0, 1})));
}

TEST(Triangulation, SimplicialConeIsItself) {
  const RatVector apex = to_rat(int_vector({0, 0, 0}));
  const std::vector<IntVector> rays{int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({1, 1, 3})};
  auto pieces = triangulate_cone(apex, rays);
  ASSERT_EQ(pieces.size(), 1u);
  auto got = pieces[0].rays();
  auto want = rays;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(pieces[0].sign(), 1);
}

TEST(Triangulation, TwoDimensionalConeIsItself) {
  auto pieces = triangulate_cone(to_rat(int_vector({1, 1})), {int_vector({2, 1}), int_vector({-1, 3})});
  EXPECT_EQ(pieces.size(), 1u);
}

TEST(Triangulation, SquareConeOnBox) {
  // cone over a square: {|x| + |y| <= z}
  const RatVector apex = to_rat(int_vector({0, 0, 0}));
  const std::vector<IntVector> rays{int_vector({1, 0, 1}), int_vector({0, 1, 1}), int_vector({-1, 0, 1}),
                                    int_vector({0, -1, 1})};
  const auto pieces = triangulate_cone(apex, rays);
  ASSERT_EQ(pieces.size(), 2u);
  const auto half_open = half_open_triangulation(apex, rays);
  ASSERT_EQ(half_open.size(), 2u);

  // The two pieces share one facet; inclusion-exclusion over the closed
  // pieces and the plain sum over the half-open ones both give the cone.
  std::vector<std::vector<mpq_class>> zero(1, std::vector<mpq_class>(3, 0));
  oracle::for_each_point({-5, -5, -5}, {5, 5, 5}, [&](const oracle::Vec& x) {
    const bool inside = std::abs(x[0]) + std::abs(x[1]) <= x[2];
    const IntVector xi = oracle::to_int(x);
    int closed = 0, open = 0;
    for (const auto& c : pieces) {
      std::vector<oracle::Vec> r;
      for (const auto& v : c.rays()) r.push_back(oracle::to_vec(v));
      if (oracle::in_cone(zero[0], r, x)) ++closed;
    }
    for (const auto& h : half_open)
      if (h.contains(xi)) ++open;
    const bool on_shared = closed == 2;
    EXPECT_EQ(closed - (on_shared ? 1 : 0), inside ? 1 : 0);
    EXPECT_EQ(open, inside ? 1 : 0);
  });
}

TEST(Triangulation, RejectsLowerDimensionalCone) {
  EXPECT_THROW(triangulate_cone(to_rat(int_vector({0, 0, 0})), {int_vector({1, 0, 0}), int_vector({0, 1, 0})}),
               std::invalid_argument);
}

TEST(AffineHull, FullDimensionalIsIdentity) {
  const HPolytope p = fig1();
  auto r = reduce_affine_hull(p, enumerate_vertices(p));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->lattice.offset, int_vector({0, 0}));
  EXPECT_EQ(r->lattice.basis.size(), 2u);
}

TEST(AffineHull, SegmentInPlane) {
  // x + y = 4, 0 <= x <= 4: five lattice points on a segment.
  const HPolytope p(IntMatrix{{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}, int_vector({4, -4, 4, 0}));
  auto r = reduce_affine_hull(p, enumerate_vertices(p));
  ASSERT_TRUE(r);
  ASSERT_EQ(r->lattice.basis.size(), 1u);
  ASSERT_TRUE(r->reduced);
  std::size_t points = 0;
  for (long y = -20; y <= 20; ++y) {
    const IntVector x = add(r->lattice.offset, scale(BigInt(y), r->lattice.basis[0]));
    if (r->reduced->contains(int_vector({y}))) {
      ++points;
      EXPECT_TRUE(p.contains(x));
    } else {
      EXPECT_FALSE(p.contains(x));
    }
  }
  EXPECT_EQ(points, 5u);
}

TEST(AffineHull, NoLatticePoints) {
  // 2x = 1 has no integer solution.
  const HPolytope p(IntMatrix{{2, 0}, {-2, 0}, {0, 1}, {0, -1}}, int_vector({1, -1, 3, 0}));
  EXPECT_FALSE(reduce_affine_hull(p, enumerate_vertices(p)));
}

TEST(WithRows, ParallelRowsKeepTighter) {
  const HPolytope p = unit_square().with_rows({int_vector({2, 0})}, int_vector({1}));
  auto box = lattice_bounding_box(enumerate_vertices(p));
  ASSERT_TRUE(box);
  EXPECT_EQ(box->upper, int_vector({0, 1}));
  EXPECT_FALSE(p.contains(int_vector({1, 0})));
}
