#include "moilp/cli.hpp"

namespace moilp {

SplitMix64Stream::SplitMix64Stream(std::uint64_t seed, std::uint64_t substream)
    : base_(seed + substream * 0xD1B54A32D192ED03ULL) {}

std::uint64_t SplitMix64Stream::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64Stream::next() {
  ++counter_;
  return mix(base_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

std::int64_t SplitMix64Stream::uniform(std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % range);
}

ProblemFile generate_knapsack(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate_knapsack: n must be positive");
  for (std::uint64_t sub = 0;; ++sub) {
    SplitMix64Stream rng(seed, sub);
    IntVector a(n);
    for (auto& x : a) x = static_cast<long>(rng.uniform(0, 20));
    const BigInt b = static_cast<long>(rng.uniform(20, 50));
    IntMatrix c(2, n);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t j = 0; j < n; ++j) c(s, j) = static_cast<long>(rng.uniform(0, 20));
    if (is_zero(a)) continue;

    ProblemFile f;
    f.name = "knap" + std::to_string(n);
    f.a = IntMatrix(n + 1, n);
    f.b.assign(n + 1, BigInt(0));
    for (std::size_t j = 0; j < n; ++j) f.a(0, j) = a[j];
    f.b[0] = b;
    for (std::size_t j = 0; j < n; ++j) {
      f.a(j + 1, j) = 1;
      f.b[j + 1] = a[j] > 0 ? BigInt(b / a[j]) : b;
    }
    f.c = std::move(c);
    return f;
  }
}

}  // namespace moilp
