#include "moilp/genfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moilp {

void GenFun::add(GenFunTerm term) {
  if (term.num_exp.size() != dim_) throw std::invalid_argument("GenFun::add: numerator dimension mismatch");
  for (const auto& v : term.den_exps) {
    if (v.size() != dim_) throw std::invalid_argument("GenFun::add: denominator dimension mismatch");
    if (is_zero(v)) throw std::invalid_argument("GenFun::add: zero denominator exponent");
  }
  terms_.push_back(std::move(term));
}

LatticeCoordinates::LatticeCoordinates(IntVector origin, std::vector<IntVector> dirs)
    : origin_(std::move(origin)), dirs_(std::move(dirs)) {
  const std::size_t n = origin_.size();
  const std::size_t d = dirs_.size();
  for (const auto& v : dirs_)
    if (v.size() != n) throw std::invalid_argument("LatticeCoordinates: dimension mismatch");
  if (d == 0) return;

  // Greedily pick d rows of the n x d direction matrix that are independent.
  std::vector<IntVector> picked;
  for (std::size_t i = 0; i < n && rows_.size() < d; ++i) {
    IntVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = dirs_[j][i];
    picked.push_back(row);
    if (rank(IntMatrix(picked)) == picked.size()) {
      rows_.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  if (rows_.size() < d) throw std::invalid_argument("LatticeCoordinates: directions are linearly dependent");
  left_inverse_ = inverse(RatMatrix(IntMatrix(picked)));
}

std::optional<IntVector> LatticeCoordinates::solve(const IntVector& x) const {
  if (x.size() != origin_.size()) throw std::invalid_argument("LatticeCoordinates::solve: dimension mismatch");
  const IntVector diff = sub(x, origin_);
  const std::size_t d = dirs_.size();
  if (d == 0) return is_zero(diff) ? std::optional<IntVector>(IntVector{}) : std::nullopt;

  RatVector rhs(d);
  for (std::size_t k = 0; k < d; ++k) rhs[k] = diff[rows_[k]];
  const RatVector lam = *left_inverse_ * rhs;
  IntVector out(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (!is_integer(lam[k])) return std::nullopt;
    out[k] = lam[k].get_num();
  }
  IntVector check(origin_.size());
  for (std::size_t k = 0; k < d; ++k)
    if (out[k] != 0) check = add(check, scale(out[k], dirs_[k]));
  if (check != diff) return std::nullopt;
  return out;
}

GenFun box_genfun(const IntBox& box) {
  const std::size_t n = box.dim();
  if (box.upper.size() != n) throw std::invalid_argument("box_genfun: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (box.lower[i] > box.upper[i]) throw std::invalid_argument("box_genfun: empty interval");
  GenFun g(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    GenFunTerm t{BigRat(1), IntVector(n), {}};
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      if (mask >> i & 1) {
        t.num_exp[i] = box.upper[i];
        e[i] = -1;
      } else {
        t.num_exp[i] = box.lower[i];
        e[i] = 1;
      }
      t.den_exps.push_back(std::move(e));
    }
    g.add(std::move(t));
  }
  return g;
}

ObjGenFun substitute_objectives(const GenFun& g, const IntMatrix& c) {
  if (c.cols() != g.dim()) throw std::invalid_argument("substitute_objectives: objective dimension mismatch");
  ObjGenFun out{g.dim(), c.rows(), {}};
  out.terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    ObjGenFunTerm o{t.coeff, t.num_exp, c * t.num_exp, {}, {}};
    for (const auto& v : t.den_exps) {
      o.den_z.push_back(v);
      o.den_t.push_back(c * v);
    }
    out.terms.push_back(std::move(o));
  }
  return out;
}

namespace {

int first_sign(const IntVector& a, const IntVector& b) {
  for (const auto& x : a)
    if (x != 0) return sgn(x);
  for (const auto& x : b)
    if (x != 0) return sgn(x);
  return 0;
}

}  // namespace

ObjGenFun normalize_signs(const ObjGenFun& g) {
  ObjGenFun out = g;
  for (auto& t : out.terms) {
    for (std::size_t j = 0; j < t.den_z.size(); ++j) {
      if (first_sign(t.den_t[j], t.den_z[j]) <= 0) continue;
      t.coeff = -t.coeff;
      t.num_z = sub(t.num_z, t.den_z[j]);
      t.num_t = sub(t.num_t, t.den_t[j]);
      t.den_z[j] = negate(t.den_z[j]);
      t.den_t[j] = negate(t.den_t[j]);
    }
  }
  return out;
}

namespace {

// Calls f(x) for every integer point of the box in lexicographic order.
template <typename F>
void for_each_box_point(const IntBox& box, F&& f) {
  const std::size_t n = box.dim();
  if (box.volume() == 0) return;
  IntVector x = box.lower;
  while (true) {
    f(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < box.upper[i]) {
        ++x[i];
        break;
      }
      x[i] = box.lower[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

Expansion expand_truncated(const GenFun& g, const IntBox& box) {
  return expand_truncated(g, box, IntMatrix::identity(g.dim()));
}

Expansion expand_truncated(const GenFun& g, const IntBox& box, const IntMatrix& order) {
  if (box.dim() != g.dim()) throw std::invalid_argument("expand_truncated: box dimension mismatch");
  if (order.cols() != g.dim()) throw std::invalid_argument("expand_truncated: order dimension mismatch");
  Expansion out;
  for_each_box_point(box, [&](const IntVector& x) { out.emplace(x, BigRat(0)); });
  for (const auto& t : g.terms()) {
    BigRat coeff = t.coeff;
    IntVector u = t.num_exp;
    std::vector<IntVector> dens;
    for (const auto& v : t.den_exps) {
      const IntVector w = order * v;
      int s = 0;
      for (const auto& x : w)
        if (x != 0) {
          s = sgn(x);
          break;
        }
      if (s == 0) throw std::invalid_argument("expand_truncated: order does not separate a denominator");
      if (s < 0) {
        coeff = -coeff;
        u = sub(u, v);
        dens.push_back(negate(v));
      } else {
        dens.push_back(v);
      }
    }
    const LatticeCoordinates coords(u, dens);
    for (auto& [x, value] : out) {
      auto lam = coords.solve(x);
      if (lam && std::all_of(lam->begin(), lam->end(), [](const BigInt& l) { return l >= 0; })) value += coeff;
    }
  }
  return out;
}

Expansion expand_truncated(const ObjGenFun& g, const IntBox& box) {
  if (box.dim() != g.dim) throw std::invalid_argument("expand_truncated: box dimension mismatch");
  const ObjGenFun norm = normalize_signs(g);
  Expansion out;
  std::vector<IntVector> points;
  for_each_box_point(box, [&](const IntVector& x) { points.push_back(x); });
  for (const auto& t : norm.terms) {
    const LatticeCoordinates coords(t.num_z, t.den_z);
    for (const auto& x : points) {
      auto lam = coords.solve(x);
      if (!lam || std::any_of(lam->begin(), lam->end(), [](const BigInt& l) { return l < 0; })) continue;
      IntVector key = x;
      IntVector tpart = t.num_t;
      for (std::size_t j = 0; j < lam->size(); ++j)
        if ((*lam)[j] != 0) tpart = add(tpart, scale((*lam)[j], t.den_t[j]));
      key.insert(key.end(), tpart.begin(), tpart.end());
      out[key] += t.coeff;
    }
  }
  return out;
}

namespace {

std::string join(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

BigInt parse_int(const std::string& tok, std::size_t line) {
  BigInt v;
  const std::string t = !tok.empty() && tok[0] == '+' ? tok.substr(1) : tok;
  if (t.empty() || v.set_str(t, 10) != 0)
    throw std::invalid_argument("parse_genfun: line " + std::to_string(line) + ": bad integer '" + tok + "'");
  return v;
}

IntVector parse_vector(const std::string& s, std::size_t line) {
  IntVector v;
  for (const auto& tok : split(s, ',')) v.push_back(parse_int(tok, line));
  return v;
}

}  // namespace

std::string serialize(const GenFun& g) {
  std::ostringstream os;
  for (const auto& t : g.terms()) {
    os << t.coeff.get_str() << " ; " << join(t.num_exp) << " ;";
    for (std::size_t j = 0; j < t.den_exps.size(); ++j) os << (j ? " | " : " ") << join(t.den_exps[j]);
    os << '\n';
  }
  return os.str();
}

GenFun parse_genfun(std::string_view text, std::optional<std::size_t> dim) {
  std::vector<GenFunTerm> terms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(raw.substr(0, hash));
    if (line.empty()) continue;

    const auto parts = split(line, ';');
    if (parts.size() != 3)
      throw std::invalid_argument("parse_genfun: line " + std::to_string(line_no) + ": expected 'coeff ; u ; v1 | ...'");
    GenFunTerm t;
    std::string c = parts[0];
    if (!c.empty() && c[0] == '+') c = c.substr(1);
    if (c.empty() || t.coeff.set_str(c, 10) != 0 || t.coeff.get_den() == 0)
      throw std::invalid_argument("parse_genfun: line " + std::to_string(line_no) + ": bad coefficient '" + parts[0] + "'");
    t.coeff.canonicalize();
    t.num_exp = parse_vector(parts[1], line_no);
    if (!parts[2].empty())
      for (const auto& d : split(parts[2], '|')) t.den_exps.push_back(parse_vector(d, line_no));
    terms.push_back(std::move(t));
  }
  if (!dim) {
    if (terms.empty()) throw std::invalid_argument("parse_genfun: dimension of an empty function is unknown");
    dim = terms.front().num_exp.size();
  }
  GenFun g(*dim);
  for (auto& t : terms) g.add(std::move(t));
  return g;
}

}  // namespace moilp
