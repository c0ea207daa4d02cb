#pragma once

// Problem files, the seeded knapsack generator, benchmark reports and the
// command dispatcher behind the `moilp` executable.

#include "moilp/moilp.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moilp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw contents of a problem file. Nonnegativity is implied and not stored.
struct ProblemFile {
  std::string name;
  IntMatrix a;
  IntVector b;
  IntMatrix c;

  [[nodiscard]] MoilpProblem to_problem() const;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Format:
///   # name: <name>        (optional)
///   n m k
///   m rows of A (n integers each)
///   b (m integers)
///   k rows of C (n integers each)
/// Tokens are whitespace separated; `#` starts a comment. Throws ParseError.
ProblemFile parse_problem_text(std::string_view text);
ProblemFile read_problem_file(const std::string& path);
std::string serialize_problem(const ProblemFile& f);

/// Throws ParseError for malformed input and UnboundedError for an unbounded
/// region.
MoilpProblem parse_problem(const std::string& path);

/// Counter-based SplitMix64 stream. Substream s, draw i (i = 0, 1, ...) is
/// mix(seed + s * 0xD1B54A32D192ED03 + (i + 1) * 0x9E3779B97F4A7C15), where
/// mix is the SplitMix64 finalizer. Everything is modulo 2^64.
class SplitMix64Stream {
 public:
  SplitMix64Stream(std::uint64_t seed, std::uint64_t substream);
  std::uint64_t next();
  /// lo + next() mod (hi - lo + 1).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

/// Biobjective knapsack "knapN": a in [0,20]^n, then b in [20,50], then the two
/// objective rows in [0,20]^n, drawn in that order from substream 0. An
/// all-zero a moves to the next substream. Rows: the knapsack row, then
/// x_i <= floor(b / a_i) (or x_i <= b when a_i = 0).
ProblemFile generate_knapsack(std::size_t n, std::uint64_t seed);

struct BenchRow {
  std::string problem;
  std::int64_t srf_ms = 0;      // generating function construction
  BigInt latpoints;             // lattice points of P
  std::uint64_t nosrf = 0;      // rational function terms
  std::int64_t digging_ms = 0;  // digging solve
  std::uint64_t effic = 0;      // |Y_E|
  std::int64_t total_ms = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Runs one instance: genfun construction, count, digging solve.
BenchRow bench_instance(const ProblemFile& f);

/// Plain-text table: one row per instance, then an average row per problem
/// name. Times in seconds with millisecond resolution.
std::string format_bench_table(const std::vector<BenchRow>& rows);
/// Header line plus one CSV row per instance.
std::string format_bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view text);

/// Entry point of the executable; argv[0] is the program name.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace moilp
