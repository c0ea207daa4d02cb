#include "moilp/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace moilp {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor_rat(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_rat(const BigRat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

IntVector int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rat(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

namespace {
void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vector dimension mismatch");
}
}  // namespace

BigInt dot(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigRat dot(const IntVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const BigInt& s, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

IntVector negate(const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

BigInt content(const IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  BigInt g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVector primitive(const RatVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRat s = v[i] * l;
    r[i] = s.get_num();
  }
  return primitive(r);
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  require_same_size(v.size(), cols_);
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::set_col(std::size_t j, const IntVector& v) {
  require_same_size(v.size(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  require_same_size(v.size(), cols_);
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  require_same_size(cols_, other.rows_);
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += (*this)(i, k) * other(k, j);
    }
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return IntMatrix();
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_col(j, columns[j]);
  return m;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (long x : r) data_.emplace_back(x);
  }
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  require_same_size(v.size(), cols_);
  RatVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    BigRat s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  require_same_size(cols_, other.rows_);
  RatMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += (*this)(i, k) * other(k, j);
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Bareiss elimination in place on a square working copy. Returns the
// determinant; T is BigInt or BigRat (division is exact in both cases).
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if constexpr (std::is_same_v<T, BigInt>) {
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        } else {
          v /= prev;
        }
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return sign < 0 ? T(-d) : d;
}

}  // namespace

BigRat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<RatVector> a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return bareiss_determinant(std::move(a));
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<IntVector> a(m.rows(), IntVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return bareiss_determinant(std::move(a));
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<IntVector> a(n, IntVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) throw std::invalid_argument("adjugate of a singular matrix");
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // Left block is now prev * I with prev = sign * det, right block R has
  // m^{-1} = R / prev, so det * m^{-1} = sign * R.
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = sign < 0 ? BigInt(-a[i][n + j]) : a[i][n + j];
  return out;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs) {
  if (!m.is_square()) throw std::invalid_argument("solve_linear needs a square matrix");
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs dimension mismatch");
  const std::size_t n = m.rows();
  std::vector<RatVector> a(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = rhs[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      BigRat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[k], a[p]);
    BigRat piv = a[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      BigRat f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  return inv;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<IntVector> a(m.rows(), IntVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      BigInt f = a[i][c], g = a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
      a[i] = primitive(a[i]);
    }
    ++r;
  }
  return r;
}

std::optional<IntVector> kernel_vector(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() + 1 != n) throw std::invalid_argument("kernel_vector expects an (n-1) x n matrix");
  if (n == 1) return IntVector{BigInt(1)};
  IntVector x(n);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t skip = 0; skip < n; ++skip) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        minor(i, jj++) = m(i, j);
      }
    }
    BigInt d = determinant(minor);
    x[skip] = (skip % 2 == 0) ? d : BigInt(-d);
  }
  if (is_zero(x)) return std::nullopt;
  return primitive(x);
}

// ---------------------------------------------------------------------------
// Column echelon form and integer solutions

ColumnEchelon column_echelon(const IntMatrix& m) {
  ColumnEchelon out;
  out.echelon = m;
  out.unimodular = IntMatrix::identity(m.cols());
  IntMatrix& h = out.echelon;
  IntMatrix& u = out.unimodular;
  const std::size_t n = m.cols();

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < h.rows(); ++i) std::swap(h(i, a), h(i, b));
    for (std::size_t i = 0; i < u.rows(); ++i) std::swap(u(i, a), u(i, b));
  };
  // col[dst] -= q * col[src]
  auto axpy_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < h.rows(); ++i) h(i, dst) -= q * h(i, src);
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, dst) -= q * u(i, src);
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows() && r < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = r; j < n; ++j) {
        if (h(i, j) == 0) continue;
        if (best == n || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == n) break;
      swap_cols(r, best);
      bool done = true;
      for (std::size_t j = r + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, r).get_mpz_t());
        axpy_col(j, r, q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, r) == 0) continue;
    if (h(i, r) < 0) {
      for (std::size_t k = 0; k < h.rows(); ++k) h(k, r) = -h(k, r);
      for (std::size_t k = 0; k < u.rows(); ++k) u(k, r) = -u(k, r);
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  return out;
}

std::optional<AffineLattice> integer_solutions(const IntMatrix& m, const IntVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("integer_solutions: rhs dimension mismatch");
  const std::size_t n = m.cols();
  ColumnEchelon ce = column_echelon(m);
  IntVector y(n);
  for (std::size_t j = 0; j < ce.rank; ++j) {
    const std::size_t p = ce.pivot_rows[j];
    BigInt val = rhs[p];
    for (std::size_t l = 0; l < j; ++l) val -= ce.echelon(p, l) * y[l];
    if (!mpz_divisible_p(val.get_mpz_t(), ce.echelon(p, j).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[j].get_mpz_t(), val.get_mpz_t(), ce.echelon(p, j).get_mpz_t());
  }
  if (ce.echelon * y != rhs) return std::nullopt;

  AffineLattice lat;
  lat.offset = ce.unimodular * y;
  for (std::size_t j = ce.rank; j < n; ++j) lat.basis.push_back(ce.unimodular.col(j));
  if (!lat.basis.empty()) lat.basis = lll_reduce(lat.basis).basis;
  return lat;
}

}  // namespace moilp
