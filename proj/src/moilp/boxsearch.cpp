#include "moilp/moilp.hpp"

#include "internal.hpp"

#include <algorithm>

namespace moilp {

namespace {

struct Node {
  IntBox box;
  std::size_t depth;
  bool enumerated;
  std::vector<IntVector> points;  // nondominated points, when enumerated
};

// Feasible points of q by fixing one coordinate at a time and descending only
// into slices with a nonzero count.
void slice_points(const HPolytope& q, const std::vector<Vertex>& vertices, std::size_t i, IntVector& prefix,
                  std::vector<IntVector>& out) {
  const std::size_t n = q.dim();
  auto box = lattice_bounding_box(vertices);
  if (!box) return;
  for (BigInt val = box->lower[i]; val <= box->upper[i]; ++val) {
    prefix[i] = val;
    if (i + 1 == n) {
      if (q.contains(prefix)) out.push_back(prefix);
      continue;
    }
    IntVector e(n);
    e[i] = 1;
    const HPolytope slice = q.with_rows({e, negate(e)}, {val, -val});
    const auto sv = enumerate_vertices(slice);
    if (count(polytope_genfun(slice, sv)) > 0) slice_points(slice, sv, i + 1, prefix, out);
  }
}

std::vector<IntBox> split(const IntBox& box) {
  const std::size_t n = box.dim();
  std::vector<IntBox> out{box};
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lower[i] == box.upper[i]) continue;
    BigInt mid = box.lower[i] + box.upper[i];
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    std::vector<IntBox> next;
    for (const auto& b : out) {
      IntBox lo = b, hi = b;
      lo.upper[i] = mid;
      hi.lower[i] = mid + 1;
      next.push_back(std::move(lo));
      next.push_back(std::move(hi));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ParetoSet detail::box_search(const HPolytope& p, const IntMatrix& c, const BoxSearchOptions& options,
                             BoxSearchStats* stats) {
  BoxSearchStats local;
  BoxSearchStats& st = stats ? *stats : local;
  st = BoxSearchStats{};
  const std::size_t n = p.dim();

  const auto vertices = enumerate_vertices(p);
  if (vertices.empty()) return {};
  const IntBox hull = *lattice_bounding_box(vertices);
  const BigInt r = options.root_bound ? *options.root_bound : max_coordinate_bound(p);
  st.root = IntBox{IntVector(n), IntVector(n, r)};
  for (std::size_t i = 0; i < n; ++i) st.root.lower[i] = std::min(BigInt(0), hull.lower[i]);

  std::vector<IntVector> confirmed;
  std::vector<IntVector> confirmed_values;
  std::map<IntVector, bool> dominated_cache;
  // Values of every feasible point enumerated so far, kept nondominated.
  std::vector<IntVector> seen_values;

  auto record_seen = [&](const IntVector& value) {
    for (const auto& y : seen_values)
      if (y == value || dominates_value(y, value)) return;
    std::erase_if(seen_values, [&](const IntVector& y) { return dominates_value(value, y); });
    seen_values.push_back(value);
  };
  auto dominated_by_seen = [&](const IntVector& value) {
    return std::any_of(seen_values.begin(), seen_values.end(),
                       [&](const IntVector& y) { return dominates_value(y, value); });
  };

  auto dominated_by_confirmed = [&](const IntVector& value) {
    return std::any_of(confirmed_values.begin(), confirmed_values.end(),
                       [&](const IntVector& y) { return dominates_value(y, value); });
  };

  std::vector<Node> stack;
  stack.push_back(Node{st.root, 0, false, {}});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++st.nodes;
    st.max_depth = std::max(st.max_depth, node.depth);

    std::vector<IntVector> candidates;
    if (node.enumerated) {
      candidates = std::move(node.points);
    } else {
      const HPolytope q = p.with_box(node.box.lower, node.box.upper);
      const auto qv = enumerate_vertices(q);
      if (qv.empty()) {
        ++st.pruned_empty;
        continue;
      }
      IntVector ub(c.rows());
      for (std::size_t s = 0; s < c.rows(); ++s) {
        BigRat best = dot(c.row(s), qv.front().coords);
        for (const auto& v : qv) best = std::max(best, dot(c.row(s), v.coords));
        ub[s] = floor_rat(best);
      }
      if (dominated_by_confirmed(ub)) {
        ++st.pruned_bound;
        continue;
      }
      const BigInt cnt = count(polytope_genfun(q, qv));
      if (cnt == 0) {
        ++st.pruned_empty;
        continue;
      }
      if (cnt > options.enumerate_threshold) {
        auto children = split(node.box);
        for (auto it = children.rbegin(); it != children.rend(); ++it)
          stack.push_back(Node{std::move(*it), node.depth + 1, false, {}});
        continue;
      }
      std::vector<IntVector> points;
      IntVector prefix(n);
      slice_points(q, qv, 0, prefix, points);
      // A point dominated by another feasible point of the node needs no
      // counting; the exact test only runs on the local front.
      for (auto& x : nondominated_filter(std::move(points), c)) {
        const IntVector value = c * x;
        record_seen(value);
        if (dominated_by_confirmed(value) || dominated_by_seen(value)) continue;
        auto it = dominated_cache.find(x);
        if (it == dominated_cache.end()) {
          ++st.point_tests;
          it = dominated_cache.emplace(x, has_dominator(p, c, x)).first;
        }
        if (!it->second) candidates.push_back(std::move(x));
      }
    }

    if (candidates.empty()) {
      ++st.pruned_empty;
      continue;
    }
    if (candidates.size() == 1) {
      ++st.leaves;
      st.max_leaf_solutions = std::max<std::size_t>(st.max_leaf_solutions, 1);
      confirmed_values.push_back(c * candidates.front());
      confirmed.push_back(std::move(candidates.front()));
      continue;
    }
    auto children = split(node.box);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      std::vector<IntVector> inside;
      for (const auto& x : candidates)
        if (it->contains(x)) inside.push_back(x);
      stack.push_back(Node{std::move(*it), node.depth + 1, true, std::move(inside)});
    }
  }
  return make_pareto_set(std::move(confirmed), c);
}

ParetoSet box_search_solve(const MoilpProblem& prob, const BoxSearchOptions& options, BoxSearchStats* stats) {
  return detail::box_search(prob.polytope(), prob.objectives(), options, stats);
}

}  // namespace moilp
