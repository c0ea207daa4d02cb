#include "moilp/genfun.hpp"

#include <stdexcept>

namespace moilp {

namespace {

// B_0..B_m with B_1 = -1/2, so that x / (e^x - 1) = sum B_k x^k / k!.
RatVector bernoulli(std::size_t m) {
  RatVector b(m + 1);
  b[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    // sum_{j=0}^{k} binom(k+1, j) B_j = 0
    BigRat s = 0;
    BigInt binom = 1;  // binom(k+1, j)
    for (std::size_t j = 0; j < k; ++j) {
      s += BigRat(binom) * b[j];
      binom = binom * BigInt(k + 1 - j) / BigInt(j + 1);
    }
    b[k] = -s / BigRat(binom);
  }
  return b;
}

// Truncated product of power series, degree <= m.
RatVector mul(const RatVector& a, const RatVector& b, std::size_t m) {
  RatVector c(m + 1);
  for (std::size_t i = 0; i <= m && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= m && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Series of e^{x t} truncated at degree m, coefficients x^k / k!.
RatVector exp_series(const BigInt& x, std::size_t m) {
  RatVector s(m + 1);
  s[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) s[k] = s[k - 1] * BigRat(x) / BigRat(BigInt(k));
  return s;
}

RatVector todd_series(const BigInt& a, const RatVector& todd, std::size_t m) {
  RatVector s(m + 1);
  BigInt pow = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    s[k] = todd[k] * BigRat(pow);
    pow *= a;
  }
  return s;
}

}  // namespace

BigInt count(const GenFun& g) {
  const std::size_t n = g.dim();
  std::size_t max_d = 0;
  for (const auto& t : g.terms()) max_d = std::max(max_d, t.den_exps.size());

  // Direction lambda = (1, s, s^2, ...) avoiding every hyperplane v^perp.
  IntVector lambda(n);
  for (long s = 2;; ++s) {
    BigInt p = 1;
    for (std::size_t i = 0; i < n; ++i, p *= s) lambda[i] = p;
    bool ok = true;
    for (const auto& t : g.terms()) {
      for (const auto& v : t.den_exps)
        if (dot(lambda, v) == 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) break;
  }

  // Todd coefficients B_k / k!.
  RatVector todd = bernoulli(max_d);
  BigInt fact = 1;
  for (std::size_t k = 0; k <= max_d; ++k) {
    if (k > 0) fact *= BigInt(k);
    todd[k] /= BigRat(fact);
  }

  BigRat total = 0;
  for (const auto& t : g.terms()) {
    const std::size_t d = t.den_exps.size();
    RatVector series = exp_series(dot(lambda, t.num_exp), d);
    BigRat scale_factor = t.coeff;
    for (const auto& v : t.den_exps) {
      const BigInt a = dot(lambda, v);
      series = mul(series, todd_series(a, todd, d), d);
      scale_factor /= BigRat(-a);
    }
    total += scale_factor * series[d];
  }
  if (!is_integer(total)) throw std::logic_error("count: non-integer total " + total.get_str());
  return total.get_num();
}

}  // namespace moilp
