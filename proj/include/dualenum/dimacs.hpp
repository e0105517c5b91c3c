#ifndef DUALENUM_DIMACS_HPP
#define DUALENUM_DIMACS_HPP

#include "dualenum/clause.hpp"
#include "dualenum/dnf.hpp"

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>

namespace dualenum {

// Parsed problem: the input CNF plus the declared projection set. With no
// projection line, every declared variable is relevant.
struct ProblemInstance {
  CnfFormula formula; // normalized; this is P0
  std::set<Var> relevant_vars;
  int declared_var_count = 0;
  int declared_clause_count = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// DIMACS CNF with an optional projection declaration in comment lines of
// the form "c p show v1 ... vk 0" (union over multiple lines). Other
// comment lines are ignored. Clauses are normalized: duplicate literals
// merged, tautological clauses dropped.
ProblemInstance parse_dimacs(std::istream &in);

// Projection lines only ("p show ... 0", with or without the leading
// "c"); used by the --project override.
std::set<Var> parse_projection(std::istream &in, int var_count);

// One cube as a "v <signed ints> 0" line, sorted by variable index.
void write_cube(const Cube &m, std::ostream &out);

struct Stats {
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  uint64_t conflicts = 0;
  uint64_t shrink_calls = 0;
};

// Trailing summary block: cube count, exact total-model cover count
// (irredundant mode only, where disjointness makes the sum exact), and
// search counters.
void write_summary(const DnfAccumulator &m, size_t relevant_count, const Stats &stats,
                   std::ostream &out);

// Exact when |X| - |cube| < 64 for every cube; saturates otherwise.
uint64_t cover_count(const DnfAccumulator &m, size_t relevant_count);

} // namespace dualenum

#endif
