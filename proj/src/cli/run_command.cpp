#include "moilp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace moilp {

namespace {

enum ExitCode : int {
  kOk = 0,
  kDisagree = 1,
  kUsage = 2,
  kBadInput = 3,
  kBudget = 4,
};

IntVector parse_vector(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ','; }, ' ');
  IntVector v;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    BigInt x;
    if (tok.find_first_not_of("+-0123456789") != std::string::npos || x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
      throw ParseError("expected an integer vector, got '" + text + "'");
    v.push_back(x);
  }
  if (v.empty()) throw ParseError("empty vector");
  return v;
}

void print_pareto(const ParetoSet& s, const IntMatrix& c, std::ostream& out) {
  out << "|X_E| = " << s.points.size() << ", |Y_E| = " << s.values.size() << '\n';
  for (const auto& x : s.points) out << to_string(x) << "  ->  " << to_string(c * x) << '\n';
}

void print_only(const std::string& label, const ParetoSet& a, const ParetoSet& b, std::ostream& out) {
  for (const auto& x : a.points)
    if (!std::binary_search(b.points.begin(), b.points.end(), x)) out << "  only " << label << ": " << to_string(x) << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiobjective integer programming with short rational generating functions", "moilp"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "digging";
  std::string nu_text;
  std::vector<std::size_t> sizes{4, 5};
  std::size_t instances = 20;
  std::uint64_t seed = 1;
  std::string csv_path;
  std::size_t gen_n = 4;
  std::uint64_t budget = kDefaultLatticeBudget;

  auto* count_cmd = app.add_subcommand("count", "Print the exact number of lattice points");
  count_cmd->add_option("file", file, "Problem file")->required();
  auto* vertices_cmd = app.add_subcommand("vertices", "Print the vertices of the feasible region");
  vertices_cmd->add_option("file", file, "Problem file")->required();
  auto* genfun_cmd = app.add_subcommand("genfun", "Print the short rational generating function");
  genfun_cmd->add_option("file", file, "Problem file")->required();
  auto* solve_cmd = app.add_subcommand("solve", "Compute the maximal complete set of nondominated solutions");
  solve_cmd->add_option("file", file, "Problem file")->required();
  solve_cmd->add_option("--method", method, "digging, boxsearch or brute")
      ->check(CLI::IsMember({"digging", "boxsearch", "brute"}));
  solve_cmd->add_option("--budget", budget, "Lattice point budget for brute");
  auto* check_cmd = app.add_subcommand("check", "Run all three methods and compare");
  check_cmd->add_option("file", file, "Problem file")->required();
  check_cmd->add_option("--budget", budget, "Lattice point budget for brute");
  auto* reopt_cmd = app.add_subcommand("reopt", "Maximize nu.x over the nondominated solutions");
  reopt_cmd->add_option("file", file, "Problem file")->required();
  reopt_cmd->add_option("--nu", nu_text, "Comma separated integer vector")->required();
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark seeded knapsack instances");
  bench_cmd->add_option("--n", sizes, "Numbers of variables")->delimiter(',');
  bench_cmd->add_option("--instances", instances, "Instances per size");
  bench_cmd->add_option("--seed", seed, "First seed; instance i uses seed + i");
  bench_cmd->add_option("--csv", csv_path, "Also write CSV rows to this path");
  auto* gen_cmd = app.add_subcommand("generate", "Print a seeded knapsack instance");
  gen_cmd->add_option("--n", gen_n, "Number of variables")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Seed");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) {
      out << serialize_problem(generate_knapsack(gen_n, seed));
      return kOk;
    }
    if (*bench_cmd) {
      std::vector<BenchRow> rows;
      for (std::size_t n : sizes)
        for (std::size_t i = 0; i < instances; ++i) rows.push_back(bench_instance(generate_knapsack(n, seed + i)));
      out << format_bench_table(rows);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
          err << "cannot write " << csv_path << '\n';
          return kBadInput;
        }
        csv << format_bench_csv(rows);
      }
      return kOk;
    }

    const ProblemFile pf = read_problem_file(file);
    const MoilpProblem prob = pf.to_problem();
    const IntMatrix& c = prob.objectives();

    if (*count_cmd) {
      out << count(polytope_genfun(prob.polytope())) << '\n';
    } else if (*vertices_cmd) {
      for (const auto& v : enumerate_vertices(prob.polytope())) out << to_string(v.coords) << '\n';
    } else if (*genfun_cmd) {
      const GenFun g = polytope_genfun(prob.polytope());
      out << serialize(g) << "# terms: " << g.size() << '\n';
    } else if (*solve_cmd) {
      ParetoSet s;
      if (method == "digging") {
        s = digging_solve(prob);
      } else if (method == "boxsearch") {
        s = box_search_solve(prob);
      } else {
        s = brute_force_pareto(prob, budget);
      }
      print_pareto(s, c, out);
    } else if (*check_cmd) {
      const ParetoSet brute = brute_force_pareto(prob, budget);
      const ParetoSet dig = digging_solve(prob);
      const ParetoSet box = box_search_solve(prob);
      if (brute == dig && brute == box) {
        out << "AGREE (|X_E| = " << brute.points.size() << ")\n";
        return kOk;
      }
      out << "DISAGREE\n";
      out << "brute " << brute.points.size() << ", digging " << dig.points.size() << ", boxsearch "
          << box.points.size() << '\n';
      print_only("brute (vs digging)", brute, dig, out);
      print_only("digging", dig, brute, out);
      print_only("brute (vs boxsearch)", brute, box, out);
      print_only("boxsearch", box, brute, out);
      return kDisagree;
    } else if (*reopt_cmd) {
      const IntVector nu = parse_vector(nu_text);
      if (nu.size() != prob.dim()) {
        err << "--nu needs " << prob.dim() << " entries\n";
        return kUsage;
      }
      const Optimum opt = optimize_over_pareto(prob, nu);
      out << "value " << opt.value << '\n';
      for (const auto& x : opt.points) out << to_string(x) << '\n';
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const UnboundedError& e) {
    err << e.what() << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace moilp
