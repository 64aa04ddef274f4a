#include "symip/instance.hpp"

#include <fstream>
#include <sstream>

namespace symip {

namespace {

// Strips '#' comments and splits into whitespace-separated tokens.
std::vector<std::string> tokenize_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

void IpInstance::validate() const {
  if (n < 1) throw ParseError("instance needs at least one variable");
  if (m < 1) throw ParseError("instance needs at least one constraint row");
  if (A.rows != m || A.cols != n) throw DimensionError("matrix shape mismatch");
  if (static_cast<int>(b.size()) != m) throw DimensionError("b length mismatch");
  if (static_cast<int>(c.size()) != n) throw DimensionError("c length mismatch");
  bool c_zero = true;
  for (const auto& q : c)
    if (q != 0) c_zero = false;
  if (c_zero) throw ParseError("utility vector c must be nonzero");
}

IpInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    auto toks = tokenize_line(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }

  size_t pos = 0;
  auto next = [&]() -> const std::vector<std::string>& {
    if (pos >= lines.size()) throw ParseError("unexpected end of instance file");
    return lines[pos++];
  };

  IpInstance inst;

  {
    const auto& l = next();
    if (l.size() != 2 || l[0] != "ip")
      throw ParseError("expected 'ip <name>' header");
    inst.name = l[1];
  }
  {
    const auto& l = next();
    if (l.size() != 2 || l[0] != "vars")
      throw ParseError("expected 'vars <n>' line");
    inst.n = std::stoi(l[1]);
    if (inst.n < 1) throw ParseError("vars must be >= 1");
  }
  {
    const auto& l = next();
    if (l.empty() || l[0] != "max" || static_cast<int>(l.size()) != inst.n + 1)
      throw ParseError("expected 'max <c_1> ... <c_n>'");
    for (int j = 0; j < inst.n; ++j) inst.c.push_back(parse_rational(l[j + 1]));
  }
  {
    const auto& l = next();
    if (l.size() != 1 || l[0] != "subject")
      throw ParseError("expected 'subject' line");
  }

  std::vector<RatVector> rows;
  RatVector rhs;
  for (;;) {
    const auto& l = next();
    if (l.size() == 1 && l[0] == "end") break;
    if (static_cast<int>(l.size()) != inst.n + 2 || l[inst.n] != "<=")
      throw DimensionError("constraint row must have n coefficients, '<=', rhs");
    RatVector row;
    for (int j = 0; j < inst.n; ++j) row.push_back(parse_rational(l[j]));
    rows.push_back(std::move(row));
    rhs.push_back(parse_rational(l[inst.n + 1]));
  }

  inst.m = static_cast<int>(rows.size());
  inst.A = RatMatrix(inst.m, inst.n);
  for (int i = 0; i < inst.m; ++i)
    for (int j = 0; j < inst.n; ++j) inst.A.at(i, j) = rows[i][j];
  inst.b = std::move(rhs);
  inst.validate();
  return inst;
}

IpInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const IpInstance& inst) {
  std::ostringstream out;
  out << "ip " << inst.name << "\n";
  out << "vars " << inst.n << "\n";
  out << "max";
  for (const auto& q : inst.c) out << " " << to_string(q);
  out << "\nsubject\n";
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) out << to_string(inst.A.at(i, j)) << " ";
    out << "<= " << to_string(inst.b[i]) << "\n";
  }
  out << "end\n";
  return out.str();
}

bool is_feasible_point(const IpInstance& inst, const Point& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw DimensionError("point dimension mismatch");
  for (const auto& xi : x)
    if (xi < 0) return false;
  for (int i = 0; i < inst.m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < inst.n; ++j) lhs += inst.A.at(i, j) * x[j];
    if (lhs > inst.b[i]) return false;
  }
  return true;
}

Rational utility_value(const IpInstance& inst, const Point& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw DimensionError("point dimension mismatch");
  return inner_product(inst.c, x);
}

}  // namespace symip
