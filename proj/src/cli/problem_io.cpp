#include "moilp/cli.hpp"

#include <fstream>
#include <sstream>

namespace moilp {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

BigInt to_int(const Token& t) {
  std::string s = t.text;
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  BigInt v;
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || v.set_str(s, 10) != 0)
    throw ParseError("line " + std::to_string(t.line) + ": expected an integer, got '" + t.text + "'");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string row_text(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

ProblemFile parse_problem_text(std::string_view text) {
  ProblemFile f;
  std::vector<Token> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("name:", 0) == 0) f.name = trim(comment.substr(5));
      line = line.substr(0, hash);
    }
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back({w, line_no});
  }

  std::size_t pos = 0;
  auto next = [&](const char* what) -> const Token& {
    if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of file while reading ") + what);
    return tokens[pos++];
  };
  auto positive = [&](const char* what) {
    const Token& t = next(what);
    BigInt v = to_int(t);
    if (v <= 0 || !v.fits_ulong_p())
      throw ParseError("line " + std::to_string(t.line) + ": " + what + " must be a positive integer");
    return static_cast<std::size_t>(v.get_ui());
  };
  const std::size_t n = positive("n");
  const std::size_t m = positive("m");
  const std::size_t k = positive("k");

  f.a = IntMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) f.a(i, j) = to_int(next("A"));
  f.b.resize(m);
  for (std::size_t i = 0; i < m; ++i) f.b[i] = to_int(next("b"));
  f.c = IntMatrix(k, n);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t j = 0; j < n; ++j) f.c(s, j) = to_int(next("C"));
  if (pos != tokens.size())
    throw ParseError("line " + std::to_string(tokens[pos].line) + ": unexpected trailing token '" + tokens[pos].text + "'");
  return f;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

std::string serialize_problem(const ProblemFile& f) {
  std::ostringstream os;
  if (!f.name.empty()) os << "# name: " << f.name << '\n';
  os << f.a.cols() << ' ' << f.a.rows() << ' ' << f.c.rows() << '\n';
  for (std::size_t i = 0; i < f.a.rows(); ++i) os << row_text(f.a.row(i)) << '\n';
  os << row_text(f.b) << '\n';
  for (std::size_t s = 0; s < f.c.rows(); ++s) os << row_text(f.c.row(s)) << '\n';
  return os.str();
}

MoilpProblem ProblemFile::to_problem() const { return MoilpProblem(a, b, c, name); }

MoilpProblem parse_problem(const std::string& path) { return read_problem_file(path).to_problem(); }

}  // namespace moilp
