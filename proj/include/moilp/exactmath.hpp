#pragma once

// Exact integer/rational arithmetic and the small amount of linear algebra the
// geometry layers need. Everything here is exact; there is no floating point.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace moilp {

using BigInt = mpz_class;
using BigRat = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

/// Builds a canonical rational num/den. Throws on a zero denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt floor_rat(const BigRat& q);
BigInt ceil_rat(const BigRat& q);
bool is_integer(const BigRat& q);

IntVector int_vector(std::initializer_list<long> values);
RatVector to_rat(const IntVector& v);

BigInt dot(const IntVector& a, const IntVector& b);
BigRat dot(const IntVector& a, const RatVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const BigInt& s, const IntVector& v);
IntVector negate(const IntVector& v);
bool is_zero(const IntVector& v);

/// gcd of the absolute values of the entries (0 for the zero vector).
BigInt content(const IntVector& v);
/// Divides by the content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Smallest positive integer multiple of a rational vector, made primitive.
IntVector primitive(const RatVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(std::vector<IntVector> rows);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] IntVector row(std::size_t i) const;
  [[nodiscard]] IntVector col(std::size_t j) const;
  void set_row(std::size_t i, const IntVector& v);
  void set_col(std::size_t j, const IntVector& v);

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntVector operator*(const IntVector& v) const;
  [[nodiscard]] IntMatrix operator*(const IntMatrix& other) const;

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Dense rational matrix, row-major. Dimensions are positive.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit RatMatrix(const IntMatrix& m);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  BigRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] RatVector operator*(const RatVector& v) const;
  [[nodiscard]] RatMatrix operator*(const RatMatrix& other) const;
  [[nodiscard]] RatMatrix transpose() const;

  static RatMatrix identity(std::size_t n);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRat> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for a non-square matrix.
BigRat determinant(const RatMatrix& m);
BigInt determinant(const IntMatrix& m);

/// Unique solution of m x = rhs, or std::nullopt when m is singular.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs);

/// Inverse of a square matrix, or std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// det(m) * m^{-1} for a nonsingular integer matrix, by fraction-free
/// Gauss-Jordan elimination. Throws std::invalid_argument when m is singular.
IntMatrix adjugate(const IntMatrix& m);

/// Rank of an integer matrix.
std::size_t rank(const IntMatrix& m);

/// Integer vector spanning the one-dimensional kernel of an (n-1) x n matrix of
/// rank n-1 (generalized cross product, made primitive). Returns std::nullopt
/// when the rank is smaller.
std::optional<IntVector> kernel_vector(const IntMatrix& m);

struct LllResult {
  /// Reduced basis vectors, same lattice as the input.
  std::vector<IntVector> basis;
  /// Unimodular transform: basis[i] = sum_j transform(i, j) * input[j].
  IntMatrix transform;
};

/// LLL reduction with delta = 3/4 on linearly independent integer vectors.
/// Throws std::invalid_argument when the vectors are dependent.
LllResult lll_reduce(const std::vector<IntVector>& basis);

/// Column echelon form under unimodular column operations: m * unimodular =
/// [echelon | 0], where the first `rank` columns of `echelon` are nonzero and
/// column j has its leading nonzero entry in row pivot_rows[j] (strictly
/// increasing).
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix unimodular;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& m);

/// Integer points of {x : m x = rhs} as x = offset + basis * y, y in Z^d.
/// std::nullopt when there is no integer solution.
struct AffineLattice {
  IntVector offset;
  std::vector<IntVector> basis;
};
std::optional<AffineLattice> integer_solutions(const IntMatrix& m, const IntVector& rhs);

}  // namespace moilp
