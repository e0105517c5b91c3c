#ifndef DUALENUM_DUAL_HPP
#define DUALENUM_DUAL_HPP

#include "dualenum/dimacs.hpp"
#include "dualenum/partition.hpp"
#include "dualenum/solver.hpp"

#include <vector>

namespace dualenum {

// The dual pair: solver over P (the input CNF plus blocking clauses) and
// solver over N (a CNF of the negated formula), kept negations of each
// other over the input variables. The disjunction of the negation
// "reasons" grows add-only through a selector chain: the clause
// (~sigma_n v t_new v sigma_new) under the assumption ~sigma_current is
// equisatisfiable with replacing the top disjunction, and keeps the
// second solver incremental.
class DualState {
public:
  SolverInstance p;
  SolverInstance n;
  VariablePartition partition;

  Lit current_selector_assumption() const { return ~Lit(selectors_.back(), true); }
  int blocking_count() const { return blocking_count_; }
  const std::vector<Var> &model_tseitins() const { return model_tseitins_; }

  // Blocks an enumerated cube over X on both sides: P gains the clause
  // ~m (origin Blocking, returned), N gains a fresh Tseitin variable t
  // with t -> m and the top disjunction is extended with t through the
  // selector chain. The forward implication alone suffices because N is
  // only ever solved under trails falsifying every blocked cube.
  ClauseRef block_model(const Cube &m);

  // Also emit the backward clauses (m -> t); off by default, the forward
  // direction is enough for correctness.
  bool encode_reverse_implication = false;

  // Test hook: skip the N side of block_model to demonstrate that the
  // dual invariant check catches the resulting divergence.
  bool omit_negation_update = false;

private:
  friend DualState encode_negation(const CnfFormula &f, const std::set<Var> &relevant);
  std::vector<Var> selectors_;      // sigma_0, sigma_1, ...
  std::vector<Var> model_tseitins_; // one per blocked cube
  int blocking_count_ = 0;
};

// Builds the initial dual pair from the input CNF: every input clause C_i
// gets a fresh t_i in T defined by (~t_i v ~l) for each l in C_i plus
// (C_i v t_i), and the top disjunction (t_1 v ... v t_m v sigma_0) makes
// some falsified input clause necessary for N to hold.
DualState encode_negation(const CnfFormula &f, const std::set<Var> &relevant);

inline DualState encode_negation(const ProblemInstance &inst) {
  return encode_negation(inst.formula, inst.relevant_vars);
}

} // namespace dualenum

#endif
