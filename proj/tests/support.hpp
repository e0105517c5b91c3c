#ifndef DUALENUM_TESTS_SUPPORT_HPP
#define DUALENUM_TESTS_SUPPORT_HPP

#include "dualenum/dimacs.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace dualenum::testsupport {

// Random instance in the acceptance-suite shape: 4-10 variables, 1-40
// clauses of width 1-4, projection set mixing full, small and random.
inline ProblemInstance random_instance(std::mt19937 &rng) {
  std::uniform_int_distribution<int> var_dist(4, 10);
  std::uniform_int_distribution<int> clause_dist(1, 40);
  const int vars = var_dist(rng);
  const int clauses = clause_dist(rng);

  ProblemInstance inst;
  inst.declared_var_count = vars;
  inst.declared_clause_count = clauses;
  inst.formula.set_var_count(vars);

  std::uniform_int_distribution<int> width_dist(1, 4);
  std::uniform_int_distribution<int> var_pick(1, vars);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < clauses; ++i) {
    int width = width_dist(rng);
    std::vector<Lit> lits;
    std::vector<int> used;
    while (static_cast<int>(lits.size()) < width) {
      int v = var_pick(rng);
      if (std::find(used.begin(), used.end(), v) != used.end())
        continue;
      used.push_back(v);
      lits.emplace_back(v, sign(rng));
    }
    if (auto c = Clause::normalized(lits, Origin::Input))
      inst.formula.add(std::move(*c));
  }

  std::uniform_int_distribution<int> shape(0, 4);
  switch (shape(rng)) {
  case 0: // X = all variables
    for (Var v = 1; v <= vars; ++v)
      inst.relevant_vars.insert(v);
    break;
  case 1: // X small
    inst.relevant_vars.insert(var_pick(rng));
    break;
  default: // random subset (may be empty)
    for (Var v = 1; v <= vars; ++v)
      if (sign(rng))
        inst.relevant_vars.insert(v);
    break;
  }
  return inst;
}

inline ProblemInstance parse_text(const std::string &text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::vector<Var> all_vars_of(const ProblemInstance &inst) {
  std::vector<Var> out;
  for (Var v = 1; v <= inst.declared_var_count; ++v)
    out.push_back(v);
  return out;
}

inline std::vector<Var> relevant_of(const ProblemInstance &inst) {
  return {inst.relevant_vars.begin(), inst.relevant_vars.end()};
}

} // namespace dualenum::testsupport

#endif
