#ifndef DUALENUM_SOLVER_HPP
#define DUALENUM_SOLVER_HPP

#include "dualenum/clause.hpp"
#include "dualenum/partition.hpp"
#include "dualenum/trail.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dualenum {

struct AnalyzeResult {
  ClauseRef learned;  // added to the formula with origin Learned
  int backjump_level; // second highest decision level in the learned clause
  Lit asserting;      // unit literal of the learned clause after backjumping
};

struct DecideResult {
  enum Kind { DecidedRelevant, DecidedOther, AllAssigned } kind;
  Lit lit{};
};

struct SolveResult {
  bool sat;
  Cube core; // unsat core, a subset of the assumptions, in assumption order
};

// One CDCL solver: watched-literal propagation, resolution-based conflict
// analysis (first-UIP and exhaustive-to-assumptions), non-chronological
// backtracking, and assumption-based incremental solving. The enumerator
// owns two instances, one per formula of the dual pair.
class SolverInstance {
public:
  explicit SolverInstance(int var_count = 0) { ensure_vars(var_count); }

  int var_count() const { return var_count_; }
  Var new_var() {
    ensure_vars(var_count_ + 1);
    return var_count_;
  }
  void ensure_vars(int var_count);

  const CnfFormula &formula() const { return formula_; }
  const Trail &trail() const { return trail_; }
  int current_level() const { return trail_.current_level(); }
  Value value(Lit l) const { return trail_.value(l); }

  // Resolves both formula clauses and virtual reasons.
  const Clause &clause_of(ClauseRef ref) const;

  // Input clauses participate in level-zero propagation; unit input
  // clauses are enqueued by the next propagate() call.
  ClauseRef add_input_clause(Clause c);

  // Learned and blocking clauses: attached to watch lists but never
  // self-enqueued; the caller asserts the unit literal where needed.
  // Literal order is kept, so callers place the asserting literal first.
  ClauseRef add_derived_clause(Clause c);

  // Reason recorded on the trail only; excluded from unit propagation.
  ClauseRef install_virtual_reason(Clause c);

  // Unit propagation to fixpoint; returns the first falsified clause.
  std::optional<ClauseRef> propagate();

  // Appends a propagated literal at the current level.
  void assert_literal(Lit l, ClauseRef reason);

  void push_decision(Lit l);

  // First-UIP conflict analysis over the trail in reverse assignment
  // order, resolving through formula and virtual reasons. Requires a
  // conflict level above zero.
  AnalyzeResult analyze_first_uip(ClauseRef conflict);

  // Exhaustive analysis: resolves every reason until only reasonless
  // (assumed) literals remain. The negated core is not added to the
  // formula.
  Cube analyze_exhaustive(ClauseRef conflict);

  // Removes all entries above `level`; watch structures untouched.
  void backtrack(int level);

  // Lowest-index unassigned relevant variable first, then lowest-index
  // irrelevant or positive-Tseitin variable; positive polarity. Never
  // picks a NegTseitin variable.
  DecideResult decide(const VariablePartition &partition);

  // Assumption-based incremental call, restoring level zero on return.
  // Assumed literals are never backtracked past while solving; on
  // conflict the exhaustive core is returned in assumption order.
  SolveResult solve_under_assumptions(const std::vector<Lit> &assumptions);

  uint64_t propagations() const { return propagations_; }
  uint64_t decisions_made() const { return decisions_; }

  // Extra runtime checks on every conflict analysis (throws
  // InvariantViolation instead of silently continuing).
  void set_runtime_checks(bool on) { runtime_checks_ = on; }

private:
  void attach_watches(ClauseRef id);
  void enqueue_propagated(Lit l, ClauseRef reason);
  std::optional<ClauseRef> drain_pending_units();
  Cube final_core(std::vector<Lit> seeds);

  CnfFormula formula_;
  Trail trail_;
  std::vector<Clause> virtual_reasons_;
  std::vector<std::vector<ClauseRef>> watches_; // indexed by watched literal code
  std::vector<Lit> pending_units_;
  std::optional<ClauseRef> empty_clause_;
  int qhead_ = 0;
  int var_count_ = 0;
  uint64_t propagations_ = 0;
  uint64_t decisions_ = 0;
  bool runtime_checks_ = false;
};

} // namespace dualenum

#endif
