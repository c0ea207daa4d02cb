#include "moilp/cli.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace moilp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(to - from).count();
}

std::string seconds(std::int64_t ms) {
  std::ostringstream os;
  os << ms / 1000 << '.' << std::setw(3) << std::setfill('0') << ms % 1000;
  return os.str();
}

// num / den rounded half up to one decimal.
std::string average(const BigInt& num, std::size_t den) {
  BigInt tenths = (20 * num + den) / BigInt(2 * static_cast<unsigned long>(den));
  BigInt whole = tenths / 10;
  BigInt frac = tenths % 10;
  return whole.get_str() + "." + frac.get_str();
}

std::int64_t parse_ms(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos || s.size() - dot != 4 || s.find_first_not_of("0123456789.") != std::string::npos)
    throw ParseError("bench csv: bad time '" + s + "'");
  return std::stoll(s.substr(0, dot)) * 1000 + std::stoll(s.substr(dot + 1));
}

const char* const kColumns[] = {"problem", "srf", "latpoints", "nosrf", "mo-digging", "effic", "total"};

}  // namespace

BenchRow bench_instance(const ProblemFile& f) {
  BenchRow row;
  row.problem = f.name;
  const auto t0 = Clock::now();
  const MoilpProblem prob = f.to_problem();
  const GenFun g = polytope_genfun(prob.polytope());
  const auto t1 = Clock::now();
  row.latpoints = count(g);
  row.nosrf = g.size();
  const auto t2 = Clock::now();
  const ParetoSet set = digging_solve(prob);
  const auto t3 = Clock::now();
  row.effic = set.values.size();
  row.srf_ms = elapsed_ms(t0, t1);
  row.digging_ms = elapsed_ms(t2, t3);
  row.total_ms = elapsed_ms(t0, t3);
  return row;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(std::begin(kColumns), std::end(kColumns));
  std::map<std::string, std::vector<const BenchRow*>> groups;
  for (const auto& r : rows) {
    cells.push_back({r.problem, seconds(r.srf_ms), r.latpoints.get_str(), std::to_string(r.nosrf),
                     seconds(r.digging_ms), std::to_string(r.effic), seconds(r.total_ms)});
    groups[r.problem].push_back(&r);
  }
  for (const auto& [name, group] : groups) {
    if (group.empty()) continue;
    const std::size_t k = group.size();
    std::int64_t srf = 0, dig = 0, total = 0;
    BigInt lat = 0, nosrf = 0, effic = 0;
    for (const BenchRow* r : group) {
      srf += r->srf_ms;
      dig += r->digging_ms;
      total += r->total_ms;
      lat += r->latpoints;
      nosrf += static_cast<unsigned long>(r->nosrf);
      effic += static_cast<unsigned long>(r->effic);
    }
    const auto avg_ms = [k](std::int64_t t) { return (t + static_cast<std::int64_t>(k) / 2) / static_cast<std::int64_t>(k); };
    cells.push_back({"avg " + name, seconds(avg_ms(srf)), average(lat, k), average(nosrf, k), seconds(avg_ms(dig)),
                     average(effic, k), seconds(avg_ms(total))});
  }

  std::vector<std::size_t> width(std::size(kColumns), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i == 0) {
        os << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(width[i])) << line[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) os << (i ? "," : "") << kColumns[i];
  os << '\n';
  for (const auto& r : rows)
    os << r.problem << ',' << seconds(r.srf_ms) << ',' << r.latpoints.get_str() << ',' << r.nosrf << ','
       << seconds(r.digging_ms) << ',' << r.effic << ',' << seconds(r.total_ms) << '\n';
  return os.str();
}

std::vector<BenchRow> parse_bench_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("bench csv: missing header");
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (f.size() != std::size(kColumns)) throw ParseError("bench csv: expected 7 columns in '" + line + "'");
    BenchRow r;
    r.problem = f[0];
    r.srf_ms = parse_ms(f[1]);
    if (r.latpoints.set_str(f[2], 10) != 0) throw ParseError("bench csv: bad latpoints '" + f[2] + "'");
    r.nosrf = std::stoull(f[3]);
    r.digging_ms = parse_ms(f[4]);
    r.effic = std::stoull(f[5]);
    r.total_ms = parse_ms(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace moilp
