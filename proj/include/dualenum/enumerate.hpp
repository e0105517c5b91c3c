#ifndef DUALENUM_ENUMERATE_HPP
#define DUALENUM_ENUMERATE_HPP

#include "dualenum/dimacs.hpp"
#include "dualenum/dnf.hpp"
#include "dualenum/dual.hpp"
#include "dualenum/errors.hpp"
#include "dualenum/oracle.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dualenum {

enum class RuleKind : uint8_t { DecX, DecYS, Unit, BTop, BBot, ETop, EBot };

const char *rule_name(RuleKind r);

enum class TerminationCause : uint8_t {
  Exhausted,     // rule ETop or EBot fired
  EmptyBlock,    // model with no surviving relevant decision; cover complete
  ModelLimit,    // max-models reached, sound partial enumeration
  ConflictLimit, // max-conflicts reached, sound partial enumeration
};

struct Limits {
  std::optional<uint64_t> max_models;
  std::optional<uint64_t> max_conflicts;
};

struct EnumOptions {
  Mode mode = Mode::Irredundant;
  Limits limits;
  bool check_invariants = false;          // boundary checks after every rule
  int oracle_budget = oracle::kInputCap;  // input-variable cap for oracle checks
  bool record_rules = false;
  bool omit_negation_update = false; // test hook, see DualState
  std::function<void(const Cube &)> on_model; // streaming sink, called per cube
};

struct EnumResult {
  DnfAccumulator models{Mode::Irredundant};
  Stats stats;
  TerminationCause cause = TerminationCause::Exhausted;
  std::vector<RuleKind> rules; // filled when record_rules is set
};

struct InvariantReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> skipped; // checks beyond an oracle cap
};

class InvariantChecker;

// The transition loop: propagate, then handle a conflict (EBot/BBot), a
// total model (ETop/BTop) or take a decision (DecX/DecYS), in that fixed
// order. Found models are shrunk by dual reasoning before being recorded.
// The relevant decisions up to the shrunk cube's deepest level form the
// blocking cube; in irredundant mode it is blocked on both sides of the
// dual pair, in redundant mode the flipped literal carries it as a
// virtual reason instead.
class Enumerator {
public:
  Enumerator(const ProblemInstance &instance, EnumOptions options);
  ~Enumerator();

  EnumResult run();

  // On-demand check of Decs, DSOP, DualPN and ImplI/ImplIRed against the
  // current state; oracle-backed checks run only within the budget.
  InvariantReport check_invariants(int oracle_budget) const;

  const DualState &dual() const { return dual_; }
  const DnfAccumulator &models() const { return models_; }

private:
  void boundary(RuleKind rule);
  void record(RuleKind rule);
  void on_conflict_limit_check();
  bool handle_conflict(ClauseRef conflict); // false = terminate
  bool handle_total_model();

  EnumOptions options_;
  DualState dual_;
  DnfAccumulator models_;
  Stats stats_;
  std::vector<RuleKind> rules_;
  TerminationCause cause_ = TerminationCause::Exhausted;
  std::unique_ptr<InvariantChecker> checker_;
};

// Convenience wrapper: parse result in, accumulator out.
EnumResult enumerate(const ProblemInstance &instance, EnumOptions options = {});

} // namespace dualenum

#endif
