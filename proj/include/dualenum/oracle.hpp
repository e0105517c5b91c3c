#ifndef DUALENUM_ORACLE_HPP
#define DUALENUM_ORACLE_HPP

#include "dualenum/clause.hpp"
#include "dualenum/dnf.hpp"
#include "dualenum/partition.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

// Brute-force reference implementations used by tests and the debug
// invariant checks. Never on the production path; the caps fail loudly
// rather than run forever.
namespace dualenum::oracle {

class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string &msg) : std::runtime_error(msg) {}
};

// A total assignment over an explicit variable list.
struct Assignment {
  std::vector<Var> vars;
  uint32_t bits = 0; // bit i set = vars[i] true

  bool value(Var v) const;
  bool satisfies(const Clause &c) const;
  bool satisfies(const Cube &m) const;
  bool satisfies(const CnfFormula &f) const;
  std::vector<Lit> literals() const;
};

inline constexpr int kTotalCap = 24;
inline constexpr int kInputCap = 10;
inline constexpr int kTseitinCap = 16;

// Exhaustive truth-table evaluation; vars must cover var(f). Cap 24.
std::vector<Assignment> total_models(const CnfFormula &f, const std::vector<Var> &vars);

// Image of total_models under restriction to x, deduplicated.
std::vector<Assignment> projected_models(const CnfFormula &f, const std::vector<Var> &all_vars,
                                         const std::vector<Var> &x);

// True iff the union of the cubes' total extensions over x equals the
// projected model set.
bool covers_equal(const DnfAccumulator &m, const CnfFormula &f, const std::vector<Var> &all_vars,
                  const std::vector<Var> &x);

// Every pair of distinct cubes contains a variable with opposite
// polarities.
bool is_dsop(const DnfAccumulator &m);

// The dual invariant: for every total assignment over the input
// variables, exactly one of the two formulas is satisfiable over its
// auxiliary variables (the selector literal fixed on the N side).
// Completions are found by exhaustive search; |X u Y| <= 10 and
// |S|, |T| <= 16.
bool dual_pn_holds(const CnfFormula &p, const CnfFormula &n, const VariablePartition &partition,
                   Lit selector_assumption);

// Exhaustive satisfiability over free_vars of clauses already reduced by
// a fixed partial assignment (shared helper; also exhaustive search).
bool satisfiable_over(const std::vector<std::vector<Lit>> &clauses,
                      const std::vector<Var> &free_vars);

} // namespace dualenum::oracle

#endif
