#include "moilp/exactmath.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace moilp;

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_rat(make_rat(7, 2)), 3);
  EXPECT_EQ(ceil_rat(make_rat(7, 2)), 4);
  EXPECT_EQ(floor_rat(make_rat(-7, 2)), -4);
  EXPECT_EQ(ceil_rat(make_rat(-7, 2)), -3);
  EXPECT_EQ(floor_rat(BigRat(5)), 5);
  EXPECT_TRUE(is_integer(make_rat(6, 3)));
  EXPECT_FALSE(is_integer(make_rat(1, 3)));
  EXPECT_THROW(make_rat(1, 0), std::domain_error);
}

TEST(Vectors, PrimitiveAndContent) {
  EXPECT_EQ(content(int_vector({4, -6, 8})), 2);
  EXPECT_EQ(primitive(int_vector({4, -6, 8})), int_vector({2, -3, 4}));
  EXPECT_EQ(primitive(RatVector{make_rat(1, 2), make_rat(-1, 3)}), int_vector({3, -2}));
  EXPECT_EQ(primitive(int_vector({0, 0})), int_vector({0, 0}));
}

TEST(SolveLinear, Identity) {
  auto x = solve_linear(RatMatrix(IntMatrix::identity(2)), to_rat(int_vector({3, 5})));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, to_rat(int_vector({3, 5})));
}

TEST(SolveLinear, Fig1Vertex) {
  auto x = solve_linear(RatMatrix(IntMatrix{{1, 1}, {1, -2}}), to_rat(int_vector({5, 2})));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, to_rat(int_vector({4, 1})));
}

TEST(SolveLinear, Singular) {
  EXPECT_FALSE(solve_linear(RatMatrix(IntMatrix{{1, 1}, {2, 2}}), to_rat(int_vector({1, 7}))));
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntMatrix::identity(3)), 1);
  EXPECT_EQ(determinant(IntMatrix{{1, 0}, {1, 2}}), 2);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(RatMatrix(IntMatrix{{2, 1}, {1, 1}})), 1);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + it % 5;
    std::vector<oracle::Vec> rows(n, oracle::Vec(n));
    std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[i][j] = rows[i][j] = oracle::uniform(rng, -9, 9);
    EXPECT_EQ(BigRat(determinant(oracle::to_matrix(rows))), oracle::det(q));
  }
}

TEST(Adjugate, TimesMatrixIsDeterminant) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + it % 5;
    std::vector<oracle::Vec> rows(n, oracle::Vec(n));
    for (auto& r : rows)
      for (auto& x : r) x = oracle::uniform(rng, -6, 6);
    if (it % 7 == 0) rows[0].assign(n, 0), rows[0][n - 1] = 1;
    const IntMatrix m = oracle::to_matrix(rows);
    const BigInt d = determinant(m);
    if (d == 0) {
      EXPECT_THROW(adjugate(m), std::invalid_argument);
      continue;
    }
    const IntMatrix prod = adjugate(m) * m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(prod(i, j), i == j ? d : BigInt(0));
  }
}

TEST(Inverse, RoundTrip) {
  const RatMatrix m(IntMatrix{{2, 1, 0}, {0, 3, 1}, {1, 0, 4}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, RatMatrix(IntMatrix::identity(3)));
  EXPECT_FALSE(inverse(RatMatrix(IntMatrix{{1, 2}, {2, 4}})));
}

TEST(Rank, Basic) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix{{1, 0, 0}, {0, 1, 0}}), 2u);
  EXPECT_EQ(rank(IntMatrix(3, 3)), 0u);
}

TEST(KernelVector, CrossProduct) {
  auto k = kernel_vector(IntMatrix{{1, 0, 0}, {0, 1, 0}});
  ASSERT_TRUE(k);
  EXPECT_EQ((*k)[0], 0);
  EXPECT_EQ((*k)[1], 0);
  EXPECT_EQ(abs((*k)[2]), 1);
  EXPECT_FALSE(kernel_vector(IntMatrix{{1, 1, 1}, {2, 2, 2}}));
}

namespace {

void expect_unimodular(const IntMatrix& t) { EXPECT_EQ(abs(determinant(t)), 1); }

void expect_transform(const std::vector<IntVector>& in, const LllResult& r) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    IntVector v(in.front().size());
    for (std::size_t j = 0; j < in.size(); ++j) v = add(v, scale(r.transform(i, j), in[j]));
    EXPECT_EQ(v, r.basis[i]);
  }
}

}  // namespace

TEST(Lll, Identity) {
  std::vector<IntVector> b{int_vector({1, 0}), int_vector({0, 1})};
  auto r = lll_reduce(b);
  EXPECT_EQ(r.basis, b);
  EXPECT_EQ(r.transform, IntMatrix::identity(2));
}

TEST(Lll, SkewedBasisOfZ2) {
  std::vector<IntVector> b{int_vector({1, 0}), int_vector({7, 1})};
  auto r = lll_reduce(b);
  expect_unimodular(r.transform);
  expect_transform(b, r);
  EXPECT_EQ(abs(determinant(IntMatrix(r.basis))), 1);
  for (const auto& v : r.basis) EXPECT_LE(dot(v, v), 1);
}

TEST(Lll, IndexTwoLatticeMembership) {
  std::vector<IntVector> b{int_vector({2, 0}), int_vector({1, 1})};
  auto r = lll_reduce(b);
  expect_unimodular(r.transform);
  expect_transform(b, r);
  EXPECT_EQ(abs(determinant(IntMatrix(r.basis))), 2);
  // The lattice is {(x, y) : x + y even}; membership in the reduced basis is
  // decided by an exact solve.
  std::mt19937_64 rng(3);
  const RatMatrix basis_cols(IntMatrix::from_columns(r.basis));
  for (int k = 0; k < 10; ++k) {
    const long p = oracle::uniform(rng, -20, 20), q = oracle::uniform(rng, -20, 20);
    const IntVector x = add(scale(BigInt(p), b[0]), scale(BigInt(q), b[1]));
    auto y = solve_linear(basis_cols, to_rat(x));
    ASSERT_TRUE(y);
    for (const auto& c : *y) EXPECT_TRUE(is_integer(c));
  }
  auto odd = solve_linear(basis_cols, to_rat(int_vector({1, 0})));
  ASSERT_TRUE(odd);
  EXPECT_FALSE(is_integer((*odd)[0]) && is_integer((*odd)[1]));
}

TEST(Lll, RandomBasesAreReduced) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 2 + it % 4;
    std::vector<IntVector> b(n, IntVector(n));
    for (auto& v : b)
      for (auto& x : v) x = oracle::uniform(rng, -30, 30);
    if (determinant(IntMatrix(b)) == 0) continue;
    auto r = lll_reduce(b);
    expect_unimodular(r.transform);
    expect_transform(b, r);
    // Size reduction and the Lovasz condition, checked with exact rational
    // Gram-Schmidt computed here.
    std::vector<RatVector> star;
    std::vector<std::vector<BigRat>> mu(n, std::vector<BigRat>(n));
    std::vector<BigRat> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
      RatVector s = to_rat(r.basis[i]);
      for (std::size_t j = 0; j < i; ++j) {
        BigRat d = 0;
        for (std::size_t c = 0; c < n; ++c) d += BigRat(r.basis[i][c]) * star[j][c];
        mu[i][j] = d / norm[j];
        for (std::size_t c = 0; c < n; ++c) s[c] -= mu[i][j] * star[j][c];
      }
      norm[i] = 0;
      for (const auto& x : s) norm[i] += x * x;
      star.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(mu[i][j]), make_rat(1, 2));
    for (std::size_t i = 1; i < n; ++i)
      EXPECT_GE(norm[i], (make_rat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]);
  }
}

TEST(Lll, RejectsDependentVectors) {
  EXPECT_THROW(lll_reduce({int_vector({1, 2}), int_vector({2, 4})}), std::invalid_argument);
}

TEST(ColumnEchelon, Structure) {
  const IntMatrix m{{2, 4, 6}, {1, 3, 5}};
  auto e = column_echelon(m);
  EXPECT_EQ(m * e.unimodular, e.echelon);
  EXPECT_EQ(abs(determinant(e.unimodular)), 1);
  EXPECT_EQ(e.rank, 2u);
  for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_EQ(e.echelon(i, 2), 0);
}

TEST(IntegerSolutions, PlaneAndNoSolution) {
  auto s = integer_solutions(IntMatrix{{1, 1, 1}}, int_vector({3}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->basis.size(), 2u);
  EXPECT_EQ(dot(int_vector({1, 1, 1}), s->offset), 3);
  for (const auto& v : s->basis) EXPECT_EQ(dot(int_vector({1, 1, 1}), v), 0);
  EXPECT_FALSE(integer_solutions(IntMatrix{{2, 4}}, int_vector({3})));
}
