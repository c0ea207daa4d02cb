#include "moilp/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace moilp {

namespace {

struct DualCone {
  std::vector<IntVector> gens;
  int sign;
};

BigInt max_norm(const IntVector& v) {
  BigInt m = 0;
  for (const auto& x : v) m = std::max(m, BigInt(abs(x)));
  return m;
}

// A nonzero w in Z^n whose coordinates alpha = G^{-1} w satisfy
// |alpha_i| < 1. Returned scaled: alpha * |det G| as integers.
struct ShortVector {
  IntVector w;
  IntVector alpha_scaled;
};

ShortVector short_vector(const std::vector<IntVector>& gens, const BigInt& det) {
  const std::size_t n = gens.size();
  const BigInt abs_det = abs(det);
  const IntMatrix adj = adjugate(IntMatrix::from_columns(gens));

  // Basis of the lattice G^{-1} Z^n scaled to integers: column j of
  // |det| * G^{-1} is the alpha-image of e_j.
  std::vector<IntVector> basis(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis[j][i] = det < 0 ? BigInt(-adj(i, j)) : adj(i, j);
  LllResult red = lll_reduce(basis);

  auto better = [](const IntVector& a, const IntVector& b) {
    BigInt na = max_norm(a), nb = max_norm(b);
    if (na != nb) return na < nb;
    return a < b;
  };

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (better(red.basis[i], red.basis[best])) best = i;
  ShortVector sv{red.transform.row(best), red.basis[best]};

  if (max_norm(sv.alpha_scaled) >= abs_det) {
    // LLL only approximates the shortest vector; search small combinations
    // of the reduced basis. Minkowski guarantees a hit since |det G| > 1.
    bool found = false;
    for (long radius = 1; !found; ++radius) {
      std::vector<long> y(n, -radius);
      while (true) {
        if (std::any_of(y.begin(), y.end(), [](long v) { return v != 0; })) {
          IntVector alpha(n), w(n);
          for (std::size_t k = 0; k < n; ++k) {
            if (y[k] == 0) continue;
            alpha = add(alpha, scale(BigInt(y[k]), red.basis[k]));
            w = add(w, scale(BigInt(y[k]), red.transform.row(k)));
          }
          if (max_norm(alpha) < abs_det && (!found || better(alpha, sv.alpha_scaled))) {
            sv = {w, alpha};
            found = true;
          }
        }
        std::size_t k = 0;
        while (k < n && y[k] == radius) y[k++] = -radius;
        if (k == n) break;
        ++y[k];
      }
    }
  }
  return sv;
}

// `det` is the determinant of the generator matrix of `cone`.
void decompose_dual(DualCone cone, const BigInt& det, std::vector<DualCone>& out, DecompositionTrace* trace) {
  const BigInt abs_det = abs(det);
  if (abs_det == 1) {
    out.push_back(std::move(cone));
    return;
  }
  ShortVector sv = short_vector(cone.gens, det);
  if (std::all_of(sv.alpha_scaled.begin(), sv.alpha_scaled.end(), [](const BigInt& a) { return a <= 0; })) {
    sv.w = negate(sv.w);
    sv.alpha_scaled = negate(sv.alpha_scaled);
  }
  for (std::size_t i = 0; i < cone.gens.size(); ++i) {
    if (sv.alpha_scaled[i] == 0) continue;
    DualCone child{cone.gens, cone.sign * sgn(sv.alpha_scaled[i])};
    child.gens[i] = sv.w;
    // Replacing column i by w = G alpha scales the determinant by alpha_i.
    BigInt child_det = det * sv.alpha_scaled[i];
    mpz_divexact(child_det.get_mpz_t(), child_det.get_mpz_t(), abs_det.get_mpz_t());
    if (trace) trace->steps.emplace_back(abs_det, abs(child_det));
    if (abs(child_det) >= abs_det)
      throw std::logic_error("barvinok_decompose: index did not decrease");
    decompose_dual(std::move(child), child_det, out, trace);
  }
}

// Columns of (M^{-1})^T for an integer matrix with columns `gens`, each made
// primitive: the generators of the polar of cone(gens).
std::vector<IntVector> polar_generators(const std::vector<IntVector>& gens) {
  const IntMatrix m = IntMatrix::from_columns(gens);
  const IntMatrix adj = adjugate(m);
  // adj * m = det * I.
  BigInt det = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) det += adj(0, j) * m(j, 0);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntVector row = primitive(adj.row(i));
    out.push_back(det < 0 ? negate(row) : row);
  }
  return out;
}

}  // namespace

std::vector<SimplicialCone> barvinok_decompose(const SimplicialCone& c, DecompositionTrace* trace) {
  if (c.index() == 1) return {c};
  std::vector<DualCone> pieces;
  DualCone root{polar_generators(c.rays()), c.sign()};
  const BigInt det = determinant(IntMatrix::from_columns(root.gens));
  decompose_dual(std::move(root), det, pieces, trace);
  std::vector<SimplicialCone> out;
  out.reserve(pieces.size());
  for (const auto& piece : pieces) out.emplace_back(c.apex(), polar_generators(piece.gens), piece.sign);
  return out;
}

GenFunTerm cone_genfun(const SimplicialCone& c) {
  if (c.index() != 1) throw std::invalid_argument("cone_genfun: cone is not unimodular");
  const IntMatrix r = c.ray_matrix();
  const RatVector beta = *solve_linear(RatMatrix(r), c.apex());
  IntVector k(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) k[i] = ceil_rat(beta[i]);
  return GenFunTerm{BigRat(c.sign()), r * k, c.rays()};
}

GenFun polytope_genfun(const HPolytope& p) { return polytope_genfun(p, enumerate_vertices(p)); }

GenFun polytope_genfun(const HPolytope& p, const std::vector<Vertex>& vertices) {
  const std::size_t n = p.dim();
  GenFun g(n);
  auto red = reduce_affine_hull(p, vertices);
  if (!red) return g;
  const AffineLattice& lat = red->lattice;
  if (!red->reduced) {
    g.add(GenFunTerm{BigRat(1), lat.offset, {}});
    return g;
  }

  const HPolytope& q = *red->reduced;
  const IntMatrix w = IntMatrix::from_columns(lat.basis);
  const bool identity = q.dim() == n && is_zero(lat.offset) && w == IntMatrix::identity(n);
  const std::vector<Vertex> q_vertices = identity ? vertices : enumerate_vertices(q);

  for (const Vertex& v : q_vertices) {
    Cone k = tangent_cone(q, v);
    std::vector<SimplicialCone> simplicial;
    if (k.rays.size() == q.dim()) {
      simplicial.emplace_back(v.coords, k.rays, 1);
    } else {
      // Triangulate the polar cone; lower-dimensional overlaps there become
      // cones with lines here and contribute nothing.
      std::vector<IntVector> h;
      for (const auto& r : k.rays) h.push_back(negate(r));
      auto dual_rays = extreme_rays(IntMatrix(h));
      for (const auto& piece : triangulate_cone(RatVector(q.dim()), dual_rays))
        simplicial.emplace_back(v.coords, polar_generators(piece.rays()), 1);
    }
    for (const auto& cone : simplicial) {
      for (const auto& uni : barvinok_decompose(cone)) {
        GenFunTerm t = cone_genfun(uni);
        if (identity) {
          g.add(std::move(t));
          continue;
        }
        GenFunTerm mapped{t.coeff, add(lat.offset, w * t.num_exp), {}};
        for (const auto& d : t.den_exps) mapped.den_exps.push_back(w * d);
        g.add(std::move(mapped));
      }
    }
  }
  return g;
}

}  // namespace moilp
