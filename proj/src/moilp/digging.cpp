#include "moilp/moilp.hpp"

#include <algorithm>

namespace moilp {

BigInt DiggingBounds::volume() const {
  if (empty) return 0;
  BigInt v = 1;
  for (std::size_t j = 0; j < lower.size(); ++j) v *= upper[j] - lower[j] + 1;
  return v;
}

DiggingBounds digging_bounds(const ObjGenFunTerm& term, const DiggingBoundsOptions& options) {
  const std::size_t n = term.num_z.size();
  const std::size_t k = term.num_t.size();
  const std::size_t d = term.den_z.size();
  const IntVector lo_obj = options.objective_lower ? *options.objective_lower : IntVector(k);
  if (lo_obj.size() != k) throw std::invalid_argument("digging_bounds: objective bound dimension mismatch");
  if (options.z_box && options.z_box->dim() != n) throw std::invalid_argument("digging_bounds: box dimension mismatch");

  DiggingBounds out;
  if (d == 0) {
    bool inside = !options.z_box || options.z_box->contains(term.num_z);
    for (std::size_t s = 0; s < k && inside; ++s) inside = term.num_t[s] >= lo_obj[s];
    out.empty = !inside;
    return out;
  }

  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t j = 0; j < d; ++j) {
    IntVector r(d);
    r[j] = -1;
    rows.push_back(std::move(r));
    rhs.push_back(0);
  }
  for (std::size_t s = 0; s < k; ++s) {
    IntVector r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = -term.den_t[j][s];
    rows.push_back(std::move(r));
    rhs.push_back(term.num_t[s] - lo_obj[s]);
  }
  if (options.z_box) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector r(d);
      for (std::size_t j = 0; j < d; ++j) r[j] = term.den_z[j][i];
      rows.push_back(r);
      rhs.push_back(options.z_box->upper[i] - term.num_z[i]);
      rows.push_back(negate(r));
      rhs.push_back(term.num_z[i] - options.z_box->lower[i]);
    }
  }

  // With a z-box and independent factors the region is bounded already.
  const bool bounded = options.z_box && rank(IntMatrix::from_columns(term.den_z)) == d;
  std::vector<Vertex> vertices;
  try {
    IntMatrix a(std::move(rows));
    vertices = enumerate_vertices(bounded ? HPolytope::trusted(std::move(a), std::move(rhs))
                                          : HPolytope(std::move(a), std::move(rhs)));
  } catch (const UnboundedError& e) {
    throw std::domain_error("digging_bounds: unbounded expansion region along " + to_string(e.direction()));
  }
  if (vertices.empty()) {
    out.empty = true;
    return out;
  }
  out.lower.assign(d, BigInt(0));
  out.upper.assign(d, BigInt(0));
  for (std::size_t j = 0; j < d; ++j) {
    BigRat lo = vertices.front().coords[j], hi = lo;
    for (const auto& v : vertices) {
      lo = std::min(lo, v.coords[j]);
      hi = std::max(hi, v.coords[j]);
    }
    out.lower[j] = std::max(BigInt(0), ceil_rat(lo));
    out.upper[j] = floor_rat(hi);
    if (out.lower[j] > out.upper[j]) out.empty = true;
  }
  return out;
}

namespace {

struct Candidate {
  IntVector x;
  IntVector y;
  IntVector lambda;
  bool active = true;
};

// Expansion of one sign-normalized term restricted to its lambda box.
class TermDigger {
 public:
  TermDigger(const ObjGenFunTerm& term, const DiggingBounds& bounds, const IntBox& z_box, const IntVector& lo_obj,
             bool pruning)
      : term_(term), bounds_(bounds), z_box_(z_box), lo_obj_(lo_obj), pruning_(pruning) {
    for (const auto& t : term_.den_t)
      prunable_.push_back(std::all_of(t.begin(), t.end(), [](const BigInt& v) { return v <= 0; }));
  }

  void run(const HPolytope& p, DiggingTermStats& ts, DiggingStats& st) {
    ts.bound_volume = bounds_.volume();
    if (bounds_.empty) return;

    std::vector<IntVector> queue;
    const std::size_t d = bounds_.lower.size();
    IntVector lam = bounds_.lower;
    while (true) {
      queue.push_back(lam);
      std::size_t j = d;
      while (j-- > 0) {
        if (lam[j] < bounds_.upper[j]) {
          ++lam[j];
          break;
        }
        lam[j] = bounds_.lower[j];
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }

    while (!queue.empty()) {
      ++ts.passes;
      std::uint64_t iterations = 0;
      for (const auto& l : queue) {
        ++iterations;
        process(l);
      }
      ts.max_pass_iterations = std::max(ts.max_pass_iterations, iterations);
      if (BigInt(static_cast<unsigned long>(iterations)) > ts.bound_volume) st.within_bounds = false;

      // Feasibility of the surviving candidates; whatever they were blocking
      // gets another look.
      queue.clear();
      for (std::size_t c = 0; c < cands_.size(); ++c) {
        if (!cands_[c].active || p.contains(cands_[c].x)) continue;
        cands_[c].active = false;
        ++st.infeasible_removed;
        auto& b = blocked_[c];
        queue.insert(queue.end(), b.begin(), b.end());
        b.clear();
        std::erase_if(roots_, [c](const auto& r) { return r.second == c; });
      }
      std::sort(queue.begin(), queue.end());
      queue.erase(std::unique(queue.begin(), queue.end()), queue.end());
      st.requeued += queue.size();
    }
  }

  [[nodiscard]] const std::vector<Candidate>& candidates() const { return cands_; }

 private:
  void process(const IntVector& lam) {
    IntVector x = term_.num_z;
    IntVector y = term_.num_t;
    for (std::size_t j = 0; j < lam.size(); ++j) {
      if (lam[j] == 0) continue;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += lam[j] * term_.den_z[j][i];
      for (std::size_t s = 0; s < y.size(); ++s) y[s] += lam[j] * term_.den_t[j][s];
    }
    if (!z_box_.contains(x)) return;
    for (std::size_t s = 0; s < y.size(); ++s)
      if (y[s] < lo_obj_[s]) return;

    if (pruning_) {
      for (const auto& [root, owner] : roots_) {
        if (covers(root, lam)) {
          blocked_[owner].push_back(lam);
          return;
        }
      }
    }
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (!cands_[c].active || !dominates_value(cands_[c].y, y)) continue;
      blocked_[c].push_back(lam);
      if (pruning_ && std::any_of(prunable_.begin(), prunable_.end(), [](bool b) { return b; }))
        roots_.emplace_back(lam, c);
      return;
    }

    const std::size_t id = cands_.size();
    cands_.push_back(Candidate{std::move(x), std::move(y), lam, true});
    blocked_.emplace_back();
    for (std::size_t c = 0; c < id; ++c) {
      if (!cands_[c].active || !dominates_value(cands_[id].y, cands_[c].y)) continue;
      cands_[c].active = false;
      blocked_[id].push_back(cands_[c].lambda);
      blocked_[id].insert(blocked_[id].end(), blocked_[c].begin(), blocked_[c].end());
      blocked_[c].clear();
      for (auto& r : roots_)
        if (r.second == c) r.second = id;
    }
  }

  // lam lies above root, and only along factors that cannot raise any
  // objective.
  [[nodiscard]] bool covers(const IntVector& root, const IntVector& lam) const {
    for (std::size_t j = 0; j < lam.size(); ++j) {
      if (lam[j] < root[j]) return false;
      if (lam[j] > root[j] && !prunable_[j]) return false;
    }
    return true;
  }

  const ObjGenFunTerm& term_;
  const DiggingBounds& bounds_;
  const IntBox& z_box_;
  const IntVector& lo_obj_;
  bool pruning_;
  std::vector<bool> prunable_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<IntVector>> blocked_;
  std::vector<std::pair<IntVector, std::size_t>> roots_;
};

}  // namespace

ParetoSet digging_solve(const MoilpProblem& prob, const DiggingOptions& options, DiggingStats* stats) {
  DiggingStats local;
  DiggingStats& st = stats ? *stats : local;
  st = DiggingStats{};
  const HPolytope& p = prob.polytope();
  const IntMatrix& c = prob.objectives();

  const auto vertices = enumerate_vertices(p);
  if (vertices.empty()) return {};
  const IntBox z_box = *lattice_bounding_box(vertices);
  IntVector lo_obj(c.rows());
  for (std::size_t s = 0; s < c.rows(); ++s) {
    BigRat m = dot(c.row(s), vertices.front().coords);
    for (const auto& v : vertices) m = std::min(m, dot(c.row(s), v.coords));
    lo_obj[s] = floor_rat(m);
  }

  const ObjGenFun f = normalize_signs(substitute_objectives(polytope_genfun(p, vertices), c));
  std::vector<IntVector> found;
  std::vector<IntVector> every_candidate;
  for (const auto& term : f.terms) {
    const DiggingBounds bounds = digging_bounds(term, {lo_obj, z_box});
    TermDigger digger(term, bounds, z_box, lo_obj, options.pruning);
    DiggingTermStats ts;
    if (term.den_z.empty()) {
      ts.bound_volume = bounds.empty ? 0 : 1;
      if (!bounds.empty) {
        every_candidate.push_back(term.num_z);
        if (p.contains(term.num_z)) found.push_back(term.num_z);
      }
      ts.candidates = bounds.empty ? 0 : 1;
      st.terms.push_back(ts);
      continue;
    }
    digger.run(p, ts, st);
    for (const auto& cand : digger.candidates()) {
      ++ts.candidates;
      every_candidate.push_back(cand.x);
      if (cand.active) found.push_back(cand.x);
    }
    st.terms.push_back(ts);
  }

  if (stats) {
    // Net signed coefficient of every candidate monomial over all terms: 1
    // exactly for feasible points, 0 for monomials that cancel.
    std::sort(every_candidate.begin(), every_candidate.end());
    every_candidate.erase(std::unique(every_candidate.begin(), every_candidate.end()), every_candidate.end());
    std::vector<LatticeCoordinates> coords;
    for (const auto& term : f.terms) coords.emplace_back(term.num_z, term.den_z);
    for (const auto& x : every_candidate) {
      BigRat net = 0;
      for (std::size_t t = 0; t < f.terms.size(); ++t) {
        auto lam = coords[t].solve(x);
        if (lam && std::all_of(lam->begin(), lam->end(), [](const BigInt& l) { return l >= 0; }))
          net += f.terms[t].coeff;
      }
      ++st.net_checks;
      if (net != (p.contains(x) ? 1 : 0)) ++st.net_mismatches;
    }
  }
  return make_pareto_set(nondominated_filter(std::move(found), c), c);
}

}  // namespace moilp
