#include "moilp/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <map>
#include <set>
#include <utility>

namespace moilp {

UnboundedError::UnboundedError(IntVector direction)
    : std::runtime_error("polyhedron is unbounded along recession direction " + to_string(direction)),
      direction_(std::move(direction)) {}

// ---------------------------------------------------------------------------
// HPolytope

HPolytope::HPolytope(IntMatrix a, IntVector b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.cols() == 0) throw std::invalid_argument("polytope dimension must be at least 1");
  if (a_.rows() != b_.size()) throw std::invalid_argument("constraint matrix and rhs disagree in length");
}

HPolytope HPolytope::trusted(IntMatrix a, IntVector b) { return HPolytope(std::move(a), std::move(b), Unchecked{}); }

HPolytope::HPolytope(IntMatrix a, IntVector b) : HPolytope(std::move(a), std::move(b), Unchecked{}) {
  // Recession cone intersected with the cube [-1, 1]^n is {0} iff bounded.
  const std::size_t n = dim();
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    rows.push_back(a_.row(i));
    rhs.emplace_back(0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = 1;
    rows.push_back(e);
    rhs.emplace_back(1);
    e[j] = -1;
    rows.push_back(e);
    rhs.emplace_back(1);
  }
  HPolytope cube = trusted(IntMatrix(std::move(rows)), std::move(rhs));
  for (const Vertex& v : enumerate_vertices(cube)) {
    if (std::any_of(v.coords.begin(), v.coords.end(), [](const BigRat& x) { return x != 0; }))
      throw UnboundedError(primitive(v.coords));
  }
}

HPolytope HPolytope::with_rows(const std::vector<IntVector>& rows, const IntVector& rhs) const {
  if (rows.size() != rhs.size()) throw std::invalid_argument("with_rows: row/rhs count mismatch");
  std::vector<IntVector> all;
  all.reserve(a_.rows() + rows.size());
  for (std::size_t i = 0; i < a_.rows(); ++i) all.push_back(a_.row(i));
  IntVector b = b_;

  // A new row parallel to an existing one (same primitive normal) only keeps
  // the tighter of the two.
  std::map<IntVector, std::size_t> by_normal;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!is_zero(all[i])) by_normal.emplace(primitive(all[i]), i);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim()) throw std::invalid_argument("with_rows: row dimension mismatch");
    if (is_zero(rows[r])) {
      if (rhs[r] < 0) {
        all.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
      continue;
    }
    const BigInt g = content(rows[r]);
    IntVector normal = primitive(rows[r]);
    auto it = by_normal.find(normal);
    if (it == by_normal.end()) {
      by_normal.emplace(std::move(normal), all.size());
      all.push_back(rows[r]);
      b.push_back(rhs[r]);
      continue;
    }
    const std::size_t i = it->second;
    if (make_rat(rhs[r], g) < make_rat(b[i], content(all[i]))) {
      all[i] = rows[r];
      b[i] = rhs[r];
    }
  }
  return trusted(IntMatrix(std::move(all)), std::move(b));
}

HPolytope HPolytope::with_box(const IntVector& lower, const IntVector& upper) const {
  const std::size_t n = dim();
  if (lower.size() != n || upper.size() != n) throw std::invalid_argument("with_box: dimension mismatch");
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = 1;
    rows.push_back(e);
    rhs.push_back(upper[j]);
    e[j] = -1;
    rows.push_back(e);
    rhs.push_back(-lower[j]);
  }
  return with_rows(rows, rhs);
}

bool HPolytope::contains(const IntVector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < dim(); ++j) s += a_(i, j) * x[j];
    if (s > b_[i]) return false;
  }
  return true;
}

bool HPolytope::contains(const RatVector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < a_.rows(); ++i)
    if (dot(a_.row(i), x) > b_[i]) return false;
  return true;
}

std::vector<std::size_t> HPolytope::tight_rows(const RatVector& x) const {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < a_.rows(); ++i)
    if (dot(a_.row(i), x) == b_[i]) t.push_back(i);
  return t;
}

// ---------------------------------------------------------------------------
// Vertex enumeration: every rank-n subset of rows, depth first, with a
// fraction-free elimination shared along the recursion so dependent prefixes
// are cut early. Runs on int64 and restarts on GMP integers on overflow.

namespace {

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
  return std::gcd(a, b);
}
std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return -a;
}

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
BigInt neg(const BigInt& a) { return -a; }

template <typename T>
void make_primitive(std::vector<T>& v) {
  T g = 0;
  for (const auto& x : v)
    if (x != 0) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

template <typename T>
T from_big(const BigInt& v);
template <>
std::int64_t from_big(const BigInt& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
template <>
BigInt from_big(const BigInt& v) {
  return v;
}

template <typename T>
BigInt to_big(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else {
    return BigInt(static_cast<long>(v));
  }
}

template <typename T>
class VertexSearch {
 public:
  explicit VertexSearch(const HPolytope& p) : n_(p.dim()), m_(p.num_rows()) {
    rows_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<T> r(n_ + 1);
      for (std::size_t j = 0; j < n_; ++j) r[j] = from_big<T>(p.a()(i, j));
      r[n_] = from_big<T>(p.b()[i]);
      rows_.push_back(std::move(r));
    }
  }

  // Feasible points as (numerators..., common denominator), each once.
  std::vector<std::vector<T>> run() {
    if (m_ >= n_) descend(0);
    std::vector<std::vector<T>> out;
    for (auto& [x, ok] : seen_)
      if (ok) out.push_back(x);
    return out;
  }

 private:
  struct Reduced {
    std::vector<T> coeffs;
    std::size_t pivot;
  };

  void descend(std::size_t start) {
    const std::size_t depth = stack_.size();
    if (depth == n_) {
      record();
      return;
    }
    for (std::size_t i = start; i + (n_ - depth) <= m_; ++i) {
      std::vector<T> r = rows_[i];
      for (const Reduced& s : stack_) {
        if (r[s.pivot] == 0) continue;
        const T f = r[s.pivot];
        const T g = s.coeffs[s.pivot];
        for (std::size_t j = 0; j <= n_; ++j) r[j] = sub(mul(g, r[j]), mul(f, s.coeffs[j]));
        make_primitive(r);
      }
      std::size_t piv = 0;
      while (piv < n_ && r[piv] == 0) ++piv;
      if (piv == n_) continue;
      stack_.push_back({std::move(r), piv});
      descend(i + 1);
      stack_.pop_back();
    }
  }

  void record() {
    // Back substitution keeping a common denominator.
    std::vector<T> num(n_, T(0));
    T den = 1;
    for (std::size_t k = stack_.size(); k-- > 0;) {
      const Reduced& s = stack_[k];
      const T lead = s.coeffs[s.pivot];
      T acc = mul(s.coeffs[n_], den);
      for (std::size_t j = 0; j < n_; ++j)
        if (j != s.pivot && s.coeffs[j] != 0) acc = sub(acc, mul(s.coeffs[j], num[j]));
      for (auto& v : num) v = mul(v, lead);
      num[s.pivot] = acc;
      den = mul(den, lead);
      T g = den;
      for (const auto& v : num)
        if (v != 0) g = gcd(g, v);
      if (g < 0) g = neg(g);
      if (g > 1) {
        for (auto& v : num) v /= g;
        den /= g;
      }
    }
    if (den < 0) {
      for (auto& v : num) v = neg(v);
      den = neg(den);
    }
    num.push_back(den);
    if (seen_.count(num)) return;
    const bool ok = feasible(num);
    seen_.emplace(std::move(num), ok);
  }

  bool feasible(const std::vector<T>& x) const {
    const T& den = x[n_];
    for (const auto& r : rows_) {
      T s = 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j] != 0) s = add(s, mul(r[j], x[j]));
      if (s > mul(r[n_], den)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<T>> rows_;
  std::vector<Reduced> stack_;
  std::map<std::vector<T>, bool> seen_;
};

template <typename T>
std::vector<RatVector> search_vertices(const HPolytope& p) {
  std::vector<RatVector> out;
  for (const auto& x : VertexSearch<T>(p).run()) {
    RatVector v(p.dim());
    const BigInt den = to_big(x.back());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = make_rat(to_big(x[j]), den);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const HPolytope& p) {
  std::vector<RatVector> points;
  try {
    points = search_vertices<std::int64_t>(p);
  } catch (const Overflow&) {
    points = search_vertices<BigInt>(p);
  }
  std::sort(points.begin(), points.end());
  std::vector<Vertex> out;
  out.reserve(points.size());
  for (auto& coords : points) {
    Vertex v;
    v.tight_rows = p.tight_rows(coords);
    v.coords = std::move(coords);
    out.push_back(std::move(v));
  }
  return out;
}

bool IntBox::contains(const IntVector& x) const {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  return true;
}

BigInt IntBox::volume() const {
  BigInt v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    v *= upper[i] - lower[i] + 1;
  }
  return v;
}

std::optional<IntBox> lattice_bounding_box(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return std::nullopt;
  const std::size_t n = vertices.front().coords.size();
  RatVector lo = vertices.front().coords, hi = lo;
  for (const auto& v : vertices)
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coords[j] < lo[j]) lo[j] = v.coords[j];
      if (v.coords[j] > hi[j]) hi[j] = v.coords[j];
    }
  IntBox box{IntVector(n), IntVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    box.lower[j] = ceil_rat(lo[j]);
    box.upper[j] = floor_rat(hi[j]);
  }
  return box;
}

BigInt max_coordinate_bound(const HPolytope& p) {
  auto vertices = enumerate_vertices(p);
  if (vertices.empty()) throw std::domain_error("max_coordinate_bound of an empty polytope");
  BigRat best = vertices.front().coords.front();
  for (const auto& v : vertices)
    for (const auto& x : v.coords) best = std::max(best, x);
  return ceil_rat(best);
}

// ---------------------------------------------------------------------------
// Cones

std::vector<IntVector> extreme_rays(const IntMatrix& h) {
  const std::size_t n = h.cols();
  const std::size_t m = h.rows();
  std::set<IntVector> rays;
  auto feasible = [&](const IntVector& d) {
    for (std::size_t i = 0; i < m; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j) s += h(i, j) * d[j];
      if (s > 0) return false;
    }
    return true;
  };
  auto consider = [&](const IntVector& d) {
    const bool pos = feasible(d);
    const IntVector nd = negate(d);
    const bool neg = feasible(nd);
    if (pos && neg) throw std::invalid_argument("extreme_rays: cone contains a line");
    if (pos) rays.insert(d);
    if (neg) rays.insert(nd);
  };

  if (n == 1) {
    consider(IntVector{BigInt(1)});
    return {rays.begin(), rays.end()};
  }
  if (m + 1 < n) return {};

  std::vector<std::size_t> idx(n - 1);
  // Iterate (n-1)-subsets of rows in lexicographic order.
  for (std::size_t i = 0; i < n - 1; ++i) idx[i] = i;
  while (true) {
    IntMatrix sub(n - 1, n);
    for (std::size_t r = 0; r < n - 1; ++r)
      for (std::size_t j = 0; j < n; ++j) sub(r, j) = h(idx[r], j);
    if (auto d = kernel_vector(sub)) consider(*d);

    std::size_t k = n - 1;
    while (k > 0 && idx[k - 1] == m - (n - 1) + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t r = k; r < n - 1; ++r) idx[r] = idx[r - 1] + 1;
  }
  return {rays.begin(), rays.end()};
}

Cone tangent_cone(const HPolytope& p, const Vertex& v) {
  if (v.coords.size() != p.dim()) throw std::invalid_argument("tangent_cone: dimension mismatch");
  if (!p.contains(v.coords)) throw std::invalid_argument("tangent_cone: point is not feasible");
  const auto tight = p.tight_rows(v.coords);
  std::vector<IntVector> rows;
  for (std::size_t i : tight) rows.push_back(p.a().row(i));
  IntMatrix h = rows.empty() ? IntMatrix(0, p.dim()) : IntMatrix(rows);
  if (rank(h) != p.dim()) throw std::invalid_argument("tangent_cone: point is not a vertex");
  return Cone{v.coords, extreme_rays(h)};
}

SimplicialCone::SimplicialCone(RatVector apex, std::vector<IntVector> rays, int sign)
    : apex_(std::move(apex)), rays_(std::move(rays)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("cone sign must be +1 or -1");
  if (rays_.size() != apex_.size()) throw std::invalid_argument("simplicial cone needs exactly n rays");
  for (auto& r : rays_) {
    if (r.size() != apex_.size()) throw std::invalid_argument("ray dimension mismatch");
    if (is_zero(r)) throw std::invalid_argument("zero ray");
    r = primitive(r);
  }
  if (determinant(ray_matrix()) == 0) throw std::invalid_argument("simplicial cone rays are dependent");
}

IntMatrix SimplicialCone::ray_matrix() const { return IntMatrix::from_columns(rays_); }

BigInt SimplicialCone::index() const { return abs(determinant(ray_matrix())); }

bool SimplicialCone::contains(const IntVector& x) const {
  RatVector rhs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = BigRat(x[i]) - apex_[i];
  auto lambda = solve_linear(RatMatrix(ray_matrix()), rhs);
  return std::all_of(lambda->begin(), lambda->end(), [](const BigRat& l) { return l >= 0; });
}

namespace {

// Inward normal of the facet of cone(rays[idx]) opposite position `skip`.
IntVector facet_normal(const std::vector<IntVector>& rays, const std::vector<std::size_t>& idx, std::size_t skip) {
  const std::size_t n = rays.front().size();
  IntMatrix sub(n - 1, n);
  std::size_t r = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == skip) continue;
    for (std::size_t j = 0; j < n; ++j) sub(r, j) = rays[idx[k]][j];
    ++r;
  }
  IntVector h = *kernel_vector(sub);
  if (dot(h, rays[idx[skip]]) < 0) h = negate(h);
  return h;
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays) {
  std::set<IntVector> s;
  for (const auto& r : rays) {
    if (is_zero(r)) throw std::invalid_argument("zero ray");
    s.insert(primitive(r));
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays, std::size_t n) {
  std::vector<std::size_t> initial;
  for (std::size_t i = 0; i < rays.size() && initial.size() < n; ++i) {
    std::vector<IntVector> trial;
    for (std::size_t k : initial) trial.push_back(rays[k]);
    trial.push_back(rays[i]);
    if (rank(IntMatrix(trial)) == trial.size()) initial.push_back(i);
  }
  if (initial.size() < n) throw std::invalid_argument("triangulate_cone: cone is not full-dimensional");

  std::vector<std::vector<std::size_t>> simplices{initial};
  std::set<std::size_t> used(initial.begin(), initial.end());
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (used.count(r)) continue;
    // Boundary facets appear in exactly one simplex.
    std::map<std::vector<std::size_t>, std::pair<int, std::pair<std::size_t, std::size_t>>> facets;
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < n; ++k)
          if (k != skip) f.push_back(simplices[s][k]);
        auto& entry = facets[f];
        entry.first += 1;
        entry.second = {s, skip};
      }
    }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, entry] : facets) {
      if (entry.first != 1) continue;
      const auto& [s, skip] = entry.second;
      IntVector h = facet_normal(rays, simplices[s], skip);
      if (dot(h, rays[r]) < 0) {
        std::vector<std::size_t> simplex = f;
        simplex.push_back(r);
        std::sort(simplex.begin(), simplex.end());
        added.push_back(std::move(simplex));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
    used.insert(r);
  }
  return simplices;
}

}  // namespace

std::vector<SimplicialCone> triangulate_cone(const RatVector& apex, const std::vector<IntVector>& rays_in) {
  const std::size_t n = apex.size();
  auto rays = canonical_rays(rays_in);
  for (const auto& r : rays)
    if (r.size() != n) throw std::invalid_argument("triangulate_cone: ray dimension mismatch");
  if (rays.size() < n || rank(IntMatrix(rays)) < n)
    throw std::invalid_argument("triangulate_cone: cone is not full-dimensional");
  // Pointed iff the dual cone {y : r . y >= 0} is full-dimensional.
  std::vector<IntVector> dual_rows;
  for (const auto& r : rays) dual_rows.push_back(negate(r));
  auto dual = extreme_rays(IntMatrix(dual_rows));
  if (dual.size() < n || rank(IntMatrix(dual)) < n) throw std::invalid_argument("triangulate_cone: cone is not pointed");

  std::vector<SimplicialCone> out;
  for (const auto& simplex : placing_triangulation(rays, n)) {
    std::vector<IntVector> rs;
    for (std::size_t k : simplex) rs.push_back(rays[k]);
    out.emplace_back(apex, std::move(rs), 1);
  }
  return out;
}

bool HalfOpenCone::contains(const IntVector& x) const {
  RatVector rhs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = BigRat(x[i]) - cone.apex()[i];
  auto lambda = *solve_linear(RatMatrix(cone.ray_matrix()), rhs);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) return false;
    if (open_facet[i] && lambda[i] == 0) return false;
  }
  return true;
}

std::vector<HalfOpenCone> half_open_triangulation(const RatVector& apex, const std::vector<IntVector>& rays) {
  auto pieces = triangulate_cone(apex, rays);
  const std::size_t n = apex.size();
  IntVector interior(n);
  for (const auto& r : canonical_rays(rays)) interior = add(interior, r);

  std::vector<HalfOpenCone> out;
  for (auto& piece : pieces) {
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    std::vector<bool> open(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector h = facet_normal(piece.rays(), idx, i);
      int s = sgn(dot(h, interior));
      for (std::size_t j = 0; s == 0 && j < n; ++j) s = sgn(h[j]);
      open[i] = s < 0;
    }
    out.push_back(HalfOpenCone{std::move(piece), std::move(open)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Affine hull

std::optional<AffineReduction> reduce_affine_hull(const HPolytope& p, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return std::nullopt;
  const std::size_t n = p.dim();
  std::vector<std::size_t> equalities = vertices.front().tight_rows;
  for (const auto& v : vertices) {
    std::vector<std::size_t> keep;
    std::set_intersection(equalities.begin(), equalities.end(), v.tight_rows.begin(), v.tight_rows.end(),
                          std::back_inserter(keep));
    equalities = std::move(keep);
  }

  AffineReduction red;
  if (equalities.empty()) {
    red.lattice.offset = IntVector(n);
    for (std::size_t j = 0; j < n; ++j) {
      IntVector e(n);
      e[j] = 1;
      red.lattice.basis.push_back(std::move(e));
    }
    red.reduced = p;
    return red;
  }

  std::vector<IntVector> eq_rows;
  IntVector eq_rhs;
  for (std::size_t i : equalities) {
    eq_rows.push_back(p.a().row(i));
    eq_rhs.push_back(p.b()[i]);
  }
  auto lattice = integer_solutions(IntMatrix(eq_rows), eq_rhs);
  if (!lattice) return std::nullopt;
  red.lattice = std::move(*lattice);
  const std::size_t d = red.lattice.basis.size();
  if (d == 0) {
    if (!p.contains(red.lattice.offset)) return std::nullopt;
    return red;
  }

  const IntMatrix w = IntMatrix::from_columns(red.lattice.basis);
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    IntVector ai = p.a().row(i);
    IntVector row = w.transpose() * ai;
    BigInt r = p.b()[i] - dot(ai, red.lattice.offset);
    if (is_zero(row)) {
      if (r < 0) return std::nullopt;
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }
  red.reduced = HPolytope::trusted(IntMatrix(std::move(rows)), std::move(rhs));
  return red;
}

}  // namespace moilp
