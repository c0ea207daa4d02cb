#include "moilp/exactmath.hpp"

#include <stdexcept>
#include <utility>

namespace moilp {

// Integral LLL (Cohen, Algorithm 2.6.7) with delta = 3/4. The Gram-Schmidt
// data is kept as integers: d[i] = prod_{j <= i} |b*_j|^2 and
// lam[k][j] = d[j] * mu[k][j], so every division below is exact.

namespace {

class IntegralLll {
 public:
  explicit IntegralLll(const std::vector<IntVector>& basis)
      : n_(basis.size()), b_(basis), h_(IntMatrix::identity(basis.size())), d_(basis.size() + 1),
        lam_(basis.size(), IntVector(basis.size())) {}

  LllResult run() {
    d_[0] = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) throw std::invalid_argument("lll_reduce: linearly dependent input vectors");
    std::size_t k = 1;  // 0-based index of the vector being inserted
    std::size_t kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        extend(k);
      }
      while (true) {
        reduce(k, k - 1);
        // d_{k+1} d_{k-1} < 3/4 d_k^2 - lam^2, in 1-based d indices.
        const BigInt lhs = 4 * d_[k + 1] * d_[k - 1];
        const BigInt rhs = 3 * d_[k] * d_[k] - 4 * lam_[k][k - 1] * lam_[k][k - 1];
        if (lhs >= rhs) break;
        swap(k, kmax);
        if (k > 1) --k;
      }
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
    return LllResult{std::move(b_), std::move(h_)};
  }

 private:
  void extend(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt u = dot(b_[k], b_[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = d_[i + 1] * u - lam_[k][i] * lam_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i].get_mpz_t());
      }
      if (j < k) {
        lam_[k][j] = u;
      } else {
        if (u == 0) throw std::invalid_argument("lll_reduce: linearly dependent input vectors");
        d_[k + 1] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    const BigInt& dl = d_[l + 1];
    if (2 * abs(lam_[k][l]) <= dl) return;
    BigInt q;
    const BigInt num = 2 * lam_[k][l] + dl;
    const BigInt den = 2 * dl;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= q * b_[l][c];
    for (std::size_t c = 0; c < n_; ++c) h_(k, c) -= q * h_(l, c);
    lam_[k][l] -= q * dl;
    for (std::size_t i = 0; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t c = 0; c < n_; ++c) std::swap(h_(k, c), h_(k - 1, c));
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const BigInt lam = lam_[k][k - 1];
    BigInt b = d_[k - 1] * d_[k + 1] + lam * lam;
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam_[i][k];
      BigInt v = d_[k + 1] * lam_[i][k - 1] - lam * t;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d_[k].get_mpz_t());
      lam_[i][k] = v;
      BigInt w = b * t + lam * lam_[i][k];
      mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), d_[k + 1].get_mpz_t());
      lam_[i][k - 1] = w;
    }
    d_[k] = b;
  }

  std::size_t n_;
  std::vector<IntVector> b_;
  IntMatrix h_;
  IntVector d_;
  std::vector<IntVector> lam_;
};

}  // namespace

LllResult lll_reduce(const std::vector<IntVector>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) throw std::invalid_argument("lll_reduce: empty basis");
  for (const auto& v : basis)
    if (v.size() != basis.front().size()) throw std::invalid_argument("lll_reduce: ragged basis");
  if (n > basis.front().size()) throw std::invalid_argument("lll_reduce: linearly dependent input vectors");
  return IntegralLll(basis).run();
}

}  // namespace moilp
