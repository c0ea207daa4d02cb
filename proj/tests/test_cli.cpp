#include "moilp/cli.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace moilp;

namespace {

const char* const kFig1 = R"(# name: fig1
# v-max (x, y) over the fig1 region
2 5 2
1 1
1 -2
-1 -1
-1 0
0 1
5 2 -2 -1 3
1 0
0 1
)";

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("moilp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "moilp");
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(ProblemFile, ParseFig1) {
  const ProblemFile f = parse_problem_text(kFig1);
  EXPECT_EQ(f.name, "fig1");
  EXPECT_EQ(f.a.rows(), 5u);
  EXPECT_EQ(f.b, int_vector({5, 2, -2, -1, 3}));
  const MoilpProblem prob = f.to_problem();
  EXPECT_EQ(enumerate_lattice_points(prob.polytope()).size(), 10u);
}

TEST(ProblemFile, RoundTrip) {
  const ProblemFile f = parse_problem_text(kFig1);
  EXPECT_EQ(parse_problem_text(serialize_problem(f)), f);
  const ProblemFile k = generate_knapsack(5, 77);
  EXPECT_EQ(parse_problem_text(serialize_problem(k)), k);
}

TEST(ProblemFile, Errors) {
  EXPECT_THROW(parse_problem_text("1 1 1\n1/2\n3\n1\n"), ParseError);
  EXPECT_THROW(parse_problem_text("1 1 1\n0.5\n3\n1\n"), ParseError);
  EXPECT_THROW(parse_problem_text("1 1 1\n1\n3\n"), ParseError);
  EXPECT_THROW(parse_problem_text("1 1 1\n1\n3\n1 9\n"), ParseError);
  EXPECT_THROW(parse_problem_text("0 1 1\n"), ParseError);
  try {
    parse_problem_text("2 1 1\n1 x\n3\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ProblemFile, UnboundedRegion) {
  // only x >= 0 is implied; x - y <= 1 leaves (1, 1) as a recession direction
  const ProblemFile f = parse_problem_text("2 1 1\n1 -1\n1\n1 1\n");
  EXPECT_THROW(f.to_problem(), UnboundedError);
}

TEST(SplitMix, KnownValues) {
  // The first outputs of the reference SplitMix64 generator started at 0.
  SplitMix64Stream s(0, 0);
  EXPECT_EQ(s.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(s.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(s.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix, SubstreamsDiffer) {
  SplitMix64Stream a(9, 0), b(9, 1);
  EXPECT_NE(a.next(), b.next());
  SplitMix64Stream c(9, 0);
  for (int i = 0; i < 50; ++i) {
    const auto v = c.uniform(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
  }
}

TEST(Knapsack, DeterministicAndInRange) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (std::size_t n : {1u, 4u, 5u}) {
      const ProblemFile f = generate_knapsack(n, seed);
      EXPECT_EQ(f, generate_knapsack(n, seed));
      EXPECT_EQ(f.name, "knap" + std::to_string(n));
      EXPECT_EQ(f.c.rows(), 2u);
      EXPECT_EQ(f.a.rows(), n + 1);
      EXPECT_GE(f.b[0], 20);
      EXPECT_LE(f.b[0], 50);
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_GE(f.a(0, j), 0);
        EXPECT_LE(f.a(0, j), 20);
        nonzero = nonzero || f.a(0, j) != 0;
        for (std::size_t s = 0; s < 2; ++s) {
          EXPECT_GE(f.c(s, j), 0);
          EXPECT_LE(f.c(s, j), 20);
        }
        const BigInt bound = f.a(0, j) > 0 ? BigInt(f.b[0] / f.a(0, j)) : f.b[0];
        EXPECT_EQ(f.b[j + 1], bound);
      }
      EXPECT_TRUE(nonzero);
      EXPECT_NO_THROW(f.to_problem());
    }
  }
  EXPECT_NE(generate_knapsack(4, 1), generate_knapsack(4, 2));
}

TEST(Knapsack, FirstDrawsFollowTheStream) {
  SplitMix64Stream s(12345, 0);
  IntVector a(4);
  for (auto& x : a) x = static_cast<long>(s.uniform(0, 20));
  const ProblemFile f = generate_knapsack(4, 12345);
  if (!is_zero(a)) EXPECT_EQ(f.a.row(0), a);
}

TEST(Knapsack, BruteForceWithinBudget) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_NO_THROW(brute_force_pareto(generate_knapsack(4, seed).to_problem()));
}

TEST(Bench, TableAndCsv) {
  std::vector<BenchRow> rows{{"knap4", 12, BigInt(202), 94, 61, 7, 74}, {"knap4", 3, BigInt(759), 56, 31, 1, 36},
                             {"knap5", 40, BigInt(1000), 300, 500, 4, 541}};
  const std::string table = format_bench_table(rows);
  std::istringstream in(table);
  std::string header;
  std::getline(in, header);
  for (const char* col : {"problem", "srf", "latpoints", "nosrf", "mo-digging", "effic", "total"})
    EXPECT_NE(header.find(col), std::string::npos);
  EXPECT_NE(table.find("avg knap4"), std::string::npos);
  EXPECT_NE(table.find("avg knap5"), std::string::npos);
  EXPECT_NE(table.find("480.5"), std::string::npos);  // mean latpoints of knap4
  EXPECT_EQ(table.find("nan"), std::string::npos);

  const std::string csv = format_bench_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "problem,srf,latpoints,nosrf,mo-digging,effic,total");
  EXPECT_NE(csv.find("knap4,0.012,202,94,0.061,7,0.074"), std::string::npos);
  EXPECT_EQ(parse_bench_csv(csv), rows);
}

TEST(Bench, SingleInstanceRow) {
  const BenchRow r = bench_instance(generate_knapsack(4, 1));
  EXPECT_EQ(r.problem, "knap4");
  EXPECT_EQ(r.latpoints, static_cast<long>(enumerate_lattice_points(generate_knapsack(4, 1).to_problem().polytope()).size()));
  EXPECT_EQ(r.effic, brute_force_pareto(generate_knapsack(4, 1).to_problem()).values.size());
  EXPECT_GE(r.total_ms, r.srf_ms + r.digging_ms);
  const std::string table = format_bench_table({r});
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream cells(line);
  std::vector<std::string> parts;
  for (std::string w; cells >> w;) parts.push_back(w);
  EXPECT_EQ(parts.size(), 7u);
  EXPECT_EQ(parts.front(), "knap4");
}

TEST(Command, Count) {
  TempDir dir;
  const auto r = run({"count", dir.write("interval4.prob", "1 1 1\n1\n4\n1\n")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST(Command, SolveEveryMethod) {
  TempDir dir;
  const std::string file = dir.write("fig1.prob", kFig1);
  for (const char* method : {"digging", "boxsearch", "brute"}) {
    const auto r = run({"solve", file, "--method", method});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "|X_E| = 3, |Y_E| = 3\n(2,3)  ->  (2,3)\n(3,2)  ->  (3,2)\n(4,1)  ->  (4,1)\n") << method;
  }
  EXPECT_EQ(run({"solve", file, "--method", "simplex"}).status, 2);
}

TEST(Command, VerticesAndGenfun) {
  TempDir dir;
  const std::string file = dir.write("fig1.prob", kFig1);
  auto r = run({"vertices", file});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(1,1)\n(1,3)\n(2,0)\n(2,3)\n(4,1)\n");
  r = run({"genfun", file});
  EXPECT_EQ(r.status, 0);
  const GenFun g = parse_genfun(r.out, 2);
  EXPECT_EQ(count(g), 10);
  EXPECT_NE(r.out.find("# terms: " + std::to_string(g.size())), std::string::npos);
}

TEST(Command, CheckAgrees) {
  TempDir dir;
  const auto r = run({"check", dir.write("knap4-seed1.prob", serialize_problem(generate_knapsack(4, 1)))});
  EXPECT_EQ(r.status, 0);
  const ParetoSet s = brute_force_pareto(generate_knapsack(4, 1).to_problem());
  EXPECT_EQ(r.out, "AGREE (|X_E| = " + std::to_string(s.points.size()) + ")\n");
}

TEST(Command, CheckBudgetExhausted) {
  TempDir dir;
  const auto r = run({"check", dir.write("fig1.prob", kFig1), "--budget", "3"});
  EXPECT_EQ(r.status, 4);
}

TEST(Command, Reopt) {
  TempDir dir;
  const std::string file = dir.write("fig1.prob", kFig1);
  auto r = run({"reopt", file, "--nu", "0,1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "value 3\n(2,3)\n");
  r = run({"reopt", file, "--nu", "(1,0)"});
  EXPECT_EQ(r.out, "value 4\n(4,1)\n");
  EXPECT_EQ(run({"reopt", file, "--nu", "1,0,0"}).status, 2);
}

TEST(Command, ErrorsAreNonzero) {
  TempDir dir;
  EXPECT_EQ(run({"count", dir.write("bad.prob", "1 1 1\n1.5\n3\n1\n")}).status, 3);
  EXPECT_EQ(run({"count", dir.write("unbounded.prob", "2 1 1\n1 -1\n1\n1 1\n")}).status, 3);
  EXPECT_EQ(run({"count", dir.path("missing.prob")}).status, 3);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
}

TEST(Command, GenerateAndBench) {
  TempDir dir;
  auto r = run({"generate", "--n", "4", "--seed", "1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse_problem_text(r.out), generate_knapsack(4, 1));

  const std::string csv = dir.path("bench.csv");
  r = run({"bench", "--n", "4", "--instances", "2", "--seed", "3", "--csv", csv});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("avg knap4"), std::string::npos);
  std::ifstream in(csv);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = parse_bench_csv(ss.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].latpoints, bench_instance(generate_knapsack(4, 3)).latpoints);
}
