#include "moilp/moilp.hpp"

#include "internal.hpp"

#include <algorithm>

namespace moilp {

namespace {

HPolytope with_nonnegativity(IntMatrix a, IntVector b) {
  const std::size_t n = a.cols();
  if (n == 0) throw std::invalid_argument("MoilpProblem: zero variables");
  if (b.size() != a.rows()) throw std::invalid_argument("MoilpProblem: A and b disagree");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = -1;
    bool present = false;
    for (std::size_t i = 0; i < rows.size() && !present; ++i) present = rows[i] == e && b[i] == 0;
    if (!present) {
      rows.push_back(std::move(e));
      b.push_back(0);
    }
  }
  return HPolytope(IntMatrix(std::move(rows)), std::move(b));
}

}  // namespace

MoilpProblem::MoilpProblem(IntMatrix a, IntVector b, IntMatrix c, std::string name)
    : p_(with_nonnegativity(std::move(a), std::move(b))), c_(std::move(c)), name_(std::move(name)) {
  if (c_.rows() == 0) throw std::invalid_argument("MoilpProblem: no objectives");
  if (c_.cols() != p_.dim()) throw std::invalid_argument("MoilpProblem: C has the wrong number of columns");
}

bool dominates_value(const IntVector& cx, const IntVector& cy) {
  if (cx.size() != cy.size()) throw std::invalid_argument("dominates: dimension mismatch");
  bool strict = false;
  for (std::size_t s = 0; s < cx.size(); ++s) {
    if (cx[s] < cy[s]) return false;
    if (cx[s] > cy[s]) strict = true;
  }
  return strict;
}

bool dominates(const IntVector& x, const IntVector& y, const IntMatrix& c) {
  if (x.size() != c.cols() || y.size() != c.cols()) throw std::invalid_argument("dominates: dimension mismatch");
  return dominates_value(c * x, c * y);
}

std::vector<IntVector> nondominated_filter(std::vector<IntVector> points, const IntMatrix& c) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<IntVector> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(c * p);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) dominated = dominates_value(values[j], values[i]);
    if (!dominated) out.push_back(points[i]);
  }
  return out;
}

ParetoSet make_pareto_set(std::vector<IntVector> points, const IntMatrix& c) {
  ParetoSet s;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) s.values.push_back(c * p);
  std::sort(s.values.begin(), s.values.end());
  s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
  s.points = std::move(points);
  return s;
}

std::vector<IntVector> enumerate_lattice_points(const HPolytope& p, std::uint64_t budget) {
  auto box = lattice_bounding_box(enumerate_vertices(p));
  if (!box) return {};
  if (box->volume() > budget)
    throw BudgetExceeded("lattice budget exceeded: box holds " + box->volume().get_str() + " points");
  std::vector<IntVector> out;
  if (box->volume() == 0) return out;
  const std::size_t n = box->dim();
  IntVector x = box->lower;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i-- > 0) {
      if (x[i] < box->upper[i]) {
        ++x[i];
        break;
      }
      x[i] = box->lower[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ParetoSet brute_force_pareto(const MoilpProblem& prob, std::uint64_t budget) {
  const IntMatrix& c = prob.objectives();
  auto points = enumerate_lattice_points(prob.polytope(), budget);
  // Sweep in decreasing lexicographic order of Cx: a dominator always comes
  // first, so comparing against the kept points suffices.
  std::vector<std::pair<IntVector, IntVector>> order;
  order.reserve(points.size());
  for (auto& x : points) order.emplace_back(c * x, std::move(x));
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<IntVector> kept_values;
  std::vector<IntVector> kept;
  for (auto& [cx, x] : order) {
    bool dominated = false;
    for (const auto& y : kept_values)
      if (dominates_value(y, cx)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    kept_values.push_back(cx);
    kept.push_back(std::move(x));
  }
  return make_pareto_set(std::move(kept), c);
}

HPolytope build_pc(const MoilpProblem& prob) {
  const HPolytope& p = prob.polytope();
  const IntMatrix& c = prob.objectives();
  const std::size_t n = p.dim();
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    IntVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = p.a()(i, j);
    rows.push_back(r);
    rhs.push_back(p.b()[i]);
  }
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    IntVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[n + j] = p.a()(i, j);
    rows.push_back(r);
    rhs.push_back(p.b()[i]);
  }
  IntVector sum_row(2 * n);
  for (std::size_t s = 0; s < c.rows(); ++s) {
    // c_s v - c_s u <= 0
    IntVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = -c(s, j);
      r[n + j] = c(s, j);
    }
    sum_row = add(sum_row, r);
    rows.push_back(std::move(r));
    rhs.push_back(0);
  }
  rows.push_back(std::move(sum_row));
  rhs.push_back(-1);
  return HPolytope::trusted(IntMatrix(std::move(rows)), std::move(rhs));
}

bool detail::has_dominator(const HPolytope& p, const IntMatrix& c, const IntVector& v) {
  const IntVector cv = c * v;
  std::vector<IntVector> rows;
  IntVector rhs;
  IntVector sum_row(p.dim());
  BigInt sum_cv = 0;
  for (std::size_t s = 0; s < c.rows(); ++s) {
    IntVector r = negate(c.row(s));
    sum_row = add(sum_row, r);
    sum_cv += cv[s];
    rows.push_back(std::move(r));
    rhs.push_back(-cv[s]);
  }
  rows.push_back(std::move(sum_row));
  rhs.push_back(-sum_cv - 1);
  const HPolytope q = p.with_rows(rows, rhs);
  const auto vertices = enumerate_vertices(q);
  if (vertices.empty()) return false;
  if (std::any_of(vertices.begin(), vertices.end(), [](const Vertex& x) {
        return std::all_of(x.coords.begin(), x.coords.end(), [](const BigRat& q) { return is_integer(q); });
      }))
    return true;
  return count(polytope_genfun(q, vertices)) > 0;
}

bool dominated_point_test(const IntVector& v, const MoilpProblem& prob) {
  const HPolytope& p = prob.polytope();
  if (v.size() != p.dim()) throw std::invalid_argument("dominated_point_test: dimension mismatch");
  if (!p.contains(v)) throw std::invalid_argument("dominated_point_test: point " + to_string(v) + " is infeasible");
  return detail::has_dominator(p, prob.objectives(), v);
}

Optimum solve_single_objective(const HPolytope& p, const IntVector& c) {
  if (c.size() != p.dim()) throw std::invalid_argument("solve_single_objective: dimension mismatch");
  if (enumerate_vertices(p).empty()) throw std::domain_error("solve_single_objective: empty polytope");
  ParetoSet s = detail::box_search(p, IntMatrix(std::vector<IntVector>{c}), {}, nullptr);
  return Optimum{dot(c, s.points.front()), std::move(s.points)};
}

Optimum optimize_over_pareto(const ParetoSet& set, const IntVector& nu) {
  if (set.points.empty()) throw std::domain_error("optimize_over_pareto: empty Pareto set");
  Optimum best{dot(nu, set.points.front()), {}};
  for (const auto& x : set.points) {
    const BigInt v = dot(nu, x);
    if (v > best.value) {
      best.value = v;
      best.points.clear();
    }
    if (v == best.value) best.points.push_back(x);
  }
  return best;
}

Optimum optimize_over_pareto(const MoilpProblem& prob, const IntVector& nu) {
  if (nu.size() != prob.dim()) throw std::invalid_argument("optimize_over_pareto: dimension mismatch");
  return optimize_over_pareto(digging_solve(prob), nu);
}

}  // namespace moilp
