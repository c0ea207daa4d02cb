#pragma once

// Checks shared by the unit tests and the acceptance runner.

#include "moilp/genfun.hpp"
#include "moilp/moilp.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <string>

namespace support {

// Integer functional strictly positive on every ray: the sum of the ray
// coordinate functionals, cleared of denominators.
inline moilp::IntVector positive_functional(const std::vector<oracle::Vec>& rays) {
  const std::size_t n = rays.size();
  std::vector<mpq_class> zero(n, 0);
  std::vector<mpq_class> l(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    oracle::Vec e(n, 0);
    e[k] = 1;
    for (const auto& c : oracle::ray_coordinates(zero, rays, e)) l[k] += c;
  }
  mpz_class den = 1;
  for (const auto& q : l) den = lcm(den, mpz_class(q.get_den()));
  moilp::IntVector out;
  for (const auto& q : l) out.push_back(mpz_class(q * den));
  return out;
}

/// Expands the signed unimodular decomposition of `cone` on the box and
/// compares with the cone's lattice indicator. Also checks that every
/// recorded step decreased the index. Returns an empty string on success.
inline std::string check_decomposition(const moilp::SimplicialCone& cone, const oracle::Vec& lo, const oracle::Vec& hi,
                                       moilp::BigInt* max_index = nullptr) {
  using namespace moilp;
  DecompositionTrace trace;
  const auto pieces = barvinok_decompose(cone, &trace);
  for (const auto& [before, after] : trace.steps)
    if (!(after < before)) return "index did not decrease: " + before.get_str() + " -> " + after.get_str();
  GenFun g(cone.dim());
  for (const auto& piece : pieces) {
    if (piece.index() != 1) return "piece is not unimodular";
    g.add(cone_genfun(piece));  // carries the piece's sign
  }
  std::vector<oracle::Vec> rays;
  for (const auto& r : cone.rays()) rays.push_back(oracle::to_vec(r));
  std::vector<IntVector> order_rows{positive_functional(rays)};
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    IntVector e(cone.dim());
    e[i] = 1;
    order_rows.push_back(e);
  }
  std::vector<mpq_class> apex;
  for (const auto& a : cone.apex()) apex.push_back(a);
  const Expansion ex = expand_truncated(g, IntBox{oracle::to_int(lo), oracle::to_int(hi)}, IntMatrix(order_rows));
  for (const auto& [x, coeff] : ex) {
    const bool inside = oracle::in_cone(apex, rays, oracle::to_vec(x));
    if (coeff != (inside ? 1 : 0)) return "coefficient " + coeff.get_str() + " at " + to_string(x);
  }
  if (max_index) *max_index = cone.index();
  return {};
}

inline moilp::MoilpProblem fig1_problem() {
  using namespace moilp;
  return MoilpProblem(IntMatrix{{1, 1}, {1, -2}, {-1, -1}, {-1, 0}, {0, 1}}, int_vector({5, 2, -2, -1, 3}),
                      IntMatrix{{1, 0}, {0, 1}}, "fig1");
}

inline oracle::System fig1_system() {
  return oracle::System{{{1, 1}, {1, -2}, {-1, -1}, {-1, 0}, {0, 1}, {0, -1}}, {5, 2, -2, -1, 3, 0}, {0, 0}, {5, 5}};
}

inline std::vector<moilp::IntVector> to_ints(const std::vector<oracle::Vec>& pts) {
  std::vector<moilp::IntVector> out;
  for (const auto& p : pts) out.push_back(oracle::to_int(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Nondominated points of a problem whose feasible region fits in [lo, hi].
inline std::vector<moilp::IntVector> oracle_pareto(const oracle::System& s, const std::vector<oracle::Vec>& c) {
  return to_ints(oracle::pareto(oracle::lattice_points(s), c));
}

/// Mutual nondomination, completeness and maximality of `set` against the
/// feasible points of `s`. Empty string on success.
inline std::string check_pareto_properties(const moilp::ParetoSet& set, const oracle::System& s,
                                           const std::vector<oracle::Vec>& c) {
  std::vector<oracle::Vec> pts;
  for (const auto& x : set.points) pts.push_back(oracle::to_vec(x));
  for (const auto& x : pts)
    if (!oracle::feasible(s, x)) return "infeasible point returned: " + moilp::to_string(oracle::to_int(x));
  for (const auto& x : pts)
    for (const auto& y : pts)
      if (oracle::dominates(c, x, y)) return "returned points dominate each other";
  for (const auto& f : oracle::lattice_points(s)) {
    const bool returned = std::find(pts.begin(), pts.end(), f) != pts.end();
    bool dominated = false;
    for (const auto& x : pts)
      if (oracle::dominates(c, x, f)) dominated = true;
    if (!returned && !dominated) {
      // either a missing nondominated point or a missing equivalent one
      for (const auto& x : pts)
        if (oracle::image(c, x) == oracle::image(c, f)) return "equivalent solution missing: " + moilp::to_string(oracle::to_int(f));
      return "feasible point neither returned nor dominated: " + moilp::to_string(oracle::to_int(f));
    }
  }
  return {};
}

}  // namespace support
