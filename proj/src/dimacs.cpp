#include "dualenum/dimacs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dualenum {

namespace {

// Splits one line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok)
    out.push_back(tok);
  return out;
}

int parse_int(const std::string &tok, int line) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception &) {
    throw ParseError("expected integer, got '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError("expected integer, got '" + tok + "'", line);
  return value;
}

// Reads "show v1 ... vk 0" starting at tokens[first]; appends to X.
void read_show_list(const std::vector<std::string> &toks, size_t first, int var_count,
                    int line_no, std::set<Var> &x) {
  bool terminated = false;
  for (size_t i = first; i < toks.size(); ++i) {
    int v = parse_int(toks[i], line_no);
    if (v == 0) {
      if (i + 1 != toks.size())
        throw ParseError("tokens after terminating 0 in projection line", line_no);
      terminated = true;
      break;
    }
    if (v < 0 || v > var_count)
      throw ParseError("projection variable out of range: " + std::to_string(v), line_no);
    x.insert(v);
  }
  if (!terminated)
    throw ParseError("missing terminating 0 in projection line", line_no);
}

bool is_show_line(const std::vector<std::string> &toks, size_t &first) {
  // "c p show ..." or "p show ..."
  if (toks.size() >= 3 && toks[0] == "c" && toks[1] == "p" && toks[2] == "show") {
    first = 3;
    return true;
  }
  if (toks.size() >= 2 && toks[0] == "p" && toks[1] == "show") {
    first = 2;
    return true;
  }
  return false;
}

} // namespace

ProblemInstance parse_dimacs(std::istream &in) {
  ProblemInstance inst;
  bool header_seen = false;
  bool any_content = false;
  std::vector<Lit> current;
  std::set<Var> shown;
  bool projection_declared = false;
  int line_no = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty())
      continue;
    any_content = true;

    if (toks[0] == "c") {
      size_t first = 0;
      if (is_show_line(toks, first)) {
        if (!header_seen)
          throw ParseError("projection line before header", line_no);
        projection_declared = true;
        read_show_list(toks, first, inst.declared_var_count, line_no, shown);
      }
      continue; // other comments ignored
    }

    if (toks[0] == "p") {
      if (header_seen)
        throw ParseError("duplicate header", line_no);
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      inst.declared_var_count = parse_int(toks[2], line_no);
      inst.declared_clause_count = parse_int(toks[3], line_no);
      if (inst.declared_var_count < 0 || inst.declared_clause_count < 0)
        throw ParseError("negative count in header", line_no);
      inst.formula.set_var_count(inst.declared_var_count);
      header_seen = true;
      continue;
    }

    if (!header_seen)
      throw ParseError("clause before header", line_no);
    for (const std::string &tok : toks) {
      int n = parse_int(tok, line_no);
      if (n == 0) {
        if (auto c = Clause::normalized(current, Origin::Input))
          inst.formula.add(std::move(*c));
        current.clear();
      } else {
        if (std::abs(n) > inst.declared_var_count)
          throw ParseError("literal out of range: " + std::to_string(n), line_no);
        current.push_back(Lit::from_dimacs(n));
      }
    }
  }

  if (!any_content)
    throw ParseError("empty input", std::max(line_no, 1));
  if (!header_seen)
    throw ParseError("missing header", std::max(line_no, 1));
  if (!current.empty())
    throw ParseError("missing terminating 0 in last clause", line_no);

  if (projection_declared) {
    inst.relevant_vars = std::move(shown);
  } else {
    for (Var v = 1; v <= inst.declared_var_count; ++v)
      inst.relevant_vars.insert(v);
  }
  return inst;
}

std::set<Var> parse_projection(std::istream &in, int var_count) {
  std::set<Var> x;
  bool any = false;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty())
      continue;
    size_t first = 0;
    if (!is_show_line(toks, first)) {
      if (toks[0] == "c")
        continue;
      throw ParseError("expected 'p show ... 0' line", line_no);
    }
    any = true;
    read_show_list(toks, first, var_count, line_no, x);
  }
  if (!any)
    throw ParseError("no projection line found", std::max(line_no, 1));
  return x;
}

void write_cube(const Cube &m, std::ostream &out) {
  std::vector<int> ints;
  ints.reserve(m.size());
  for (Lit l : m)
    ints.push_back(l.to_dimacs());
  std::sort(ints.begin(), ints.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  out << 'v';
  for (int n : ints)
    out << ' ' << n;
  out << " 0\n";
}

uint64_t cover_count(const DnfAccumulator &m, size_t relevant_count) {
  uint64_t total = 0;
  for (const Cube &cube : m) {
    size_t free_vars = relevant_count - cube.size();
    if (free_vars >= 64)
      return UINT64_MAX;
    uint64_t add = uint64_t(1) << free_vars;
    if (total > UINT64_MAX - add)
      return UINT64_MAX;
    total += add;
  }
  return total;
}

void write_summary(const DnfAccumulator &m, size_t relevant_count, const Stats &stats,
                   std::ostream &out) {
  out << "s cubes " << m.size() << '\n';
  if (m.mode() == Mode::Irredundant)
    out << "s cover " << cover_count(m, relevant_count) << '\n';
  out << "s decisions " << stats.decisions << '\n';
  out << "s propagations " << stats.propagations << '\n';
  out << "s conflicts " << stats.conflicts << '\n';
  out << "s shrink-calls " << stats.shrink_calls << '\n';
}

} // namespace dualenum
