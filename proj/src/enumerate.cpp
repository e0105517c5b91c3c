#include "dualenum/enumerate.hpp"

#include "dualenum/shrink.hpp"
#include "dualenum/trail.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dualenum {

const char *rule_name(RuleKind r) {
  switch (r) {
  case RuleKind::DecX:
    return "DecX";
  case RuleKind::DecYS:
    return "DecYS";
  case RuleKind::Unit:
    return "Unit";
  case RuleKind::BTop:
    return "BTop";
  case RuleKind::BBot:
    return "BBot";
  case RuleKind::ETop:
    return "ETop";
  case RuleKind::EBot:
    return "EBot";
  }
  return "?";
}

namespace {

std::string cube_to_string(const Cube &m) {
  std::ostringstream ss;
  ss << '{';
  for (size_t i = 0; i < m.size(); ++i)
    ss << (i ? " " : "") << m[i];
  ss << '}';
  return ss.str();
}

} // namespace

// Runtime verification of the calculus invariants, maintained
// incrementally so the full random suite stays fast:
//  - Decs and the termination measure are structural, checked per rule.
//  - The oracle-backed checks keep the model set of the dual pair's P
//    side over the input variables; clause additions only ever filter it
//    (blocking) or must leave it unchanged (learned clause entailment).
//  - DualPN is re-checked through the oracle whenever P or N changed.
class InvariantChecker {
public:
  InvariantChecker(const DualState &ds, const DnfAccumulator &models, Mode mode, int budget)
      : ds_(ds), models_(models), mode_(mode) {
    inputs_ = ds_.partition.input_vars();
    var_index_.assign(ds_.partition.var_count() + 1, -1);
    for (size_t i = 0; i < inputs_.size(); ++i)
      var_index_[inputs_[i]] = static_cast<int>(i);
    oracle_on_ = static_cast<int>(inputs_.size()) <= std::min(budget, oracle::kTotalCap);
    if (oracle_on_)
      rebuild_model_set();
    p_seen_ = count_p_clauses();
    n_seen_ = count_n_clauses();
    dual_dirty_ = true; // validate the fresh encoding once
    last_measure_ = measure();
  }

  void on_boundary(RuleKind rule) {
    std::vector<uint8_t> m = measure();
    if (!std::lexicographical_compare(m.begin(), m.end(), last_measure_.begin(),
                                      last_measure_.end()))
      throw InvariantViolation("TerminationMeasure",
                               std::string("state did not decrease after rule ") +
                                   rule_name(rule));
    last_measure_ = std::move(m);
    check_state();
  }

  // Absorbing checks without the measure comparison; run once more when
  // the loop stops so terminal rules are covered too.
  void finalize() { check_state(); }

  // Snapshot check used by Enumerator::check_invariants.
  InvariantReport report(int budget) const {
    InvariantReport rep;
    std::string why;
    if (!ds_.p.trail().well_formed(&why)) {
      rep.ok = false;
      rep.violations.push_back("Decs: " + why);
    }
    if (mode_ == Mode::Irredundant && !oracle::is_dsop(models_)) {
      rep.ok = false;
      rep.violations.push_back("DSOP: two recorded cubes do not clash");
    }
    if (static_cast<int>(inputs_.size()) > budget) {
      rep.skipped.push_back("DualPN (oracle budget)");
      rep.skipped.push_back("ImplI (oracle budget)");
      return rep;
    }
    try {
      if (!oracle::dual_pn_holds(p_view(), n_view(), ds_.partition,
                                 ds_.current_selector_assumption())) {
        rep.ok = false;
        rep.violations.push_back("DualPN: P and N are not negations of each other");
      }
    } catch (const oracle::CapExceeded &) {
      rep.skipped.push_back("DualPN (Tseitin cap)");
    }
    try {
      check_impl_trail();
    } catch (const InvariantViolation &e) {
      rep.ok = false;
      rep.violations.push_back(e.what());
    }
    return rep;
  }

private:
  void check_state() {
    std::string why;
    if (!ds_.p.trail().well_formed(&why))
      throw InvariantViolation("Decs", why);
    absorb_new_clauses();
    absorb_new_cubes();
    if (dual_dirty_) {
      check_dual_pn();
      dual_dirty_ = false;
    }
    if (oracle_on_)
      check_impl_trail();
  }

  static bool model_satisfies(uint32_t bits, Lit l, const std::vector<int> &idx) {
    return (((bits >> idx[l.var()]) & 1) != 0) == l.positive();
  }

  uint64_t count_p_clauses() const { return ds_.p.formula().size(); }
  uint64_t count_n_clauses() const { return ds_.n.formula().size(); }

  std::vector<uint8_t> measure() const {
    const Trail &t = ds_.p.trail();
    std::vector<uint8_t> out;
    out.reserve(ds_.p.var_count());
    for (const TrailEntry &e : t.entries())
      out.push_back(e.kind == EntryKind::Decision ? 1 : 0);
    out.resize(ds_.p.var_count(), 2);
    return out;
  }

  CnfFormula p_view() const {
    CnfFormula f;
    for (const Clause &c : ds_.p.formula())
      if (c.origin() == Origin::Input || c.origin() == Origin::Blocking)
        f.add(c);
    f.set_var_count(ds_.p.var_count());
    return f;
  }

  CnfFormula n_view() const {
    CnfFormula f;
    for (const Clause &c : ds_.n.formula())
      if (c.origin() == Origin::NegationEncoding)
        f.add(c);
    f.set_var_count(ds_.n.var_count());
    return f;
  }

  void rebuild_model_set() {
    model_bits_.clear();
    CnfFormula base;
    for (const Clause &c : ds_.p.formula())
      if (c.origin() == Origin::Input ||
          (mode_ == Mode::Irredundant && c.origin() == Origin::Blocking))
        base.add(c);
    base.set_var_count(ds_.p.var_count());
    for (const oracle::Assignment &a : oracle::total_models(base, inputs_))
      model_bits_.push_back(a.bits);
    if (mode_ == Mode::Redundant)
      for (const Cube &m : models_)
        filter_by_negated_cube(m);
  }

  void filter_by_clause(const Clause &c) {
    std::erase_if(model_bits_, [&](uint32_t bits) {
      for (Lit l : c)
        if (model_satisfies(bits, l, var_index_))
          return false;
      return true; // clause falsified: no longer a model of P
    });
  }

  void filter_by_negated_cube(const Cube &m) {
    std::erase_if(model_bits_, [&](uint32_t bits) {
      for (Lit l : m)
        if (!model_satisfies(bits, l, var_index_))
          return false;
      return true; // cube satisfied: excluded by the negated DNF
    });
  }

  void absorb_new_clauses() {
    const CnfFormula &pf = ds_.p.formula();
    for (uint64_t id = p_seen_; id < pf.size(); ++id) {
      const Clause &c = pf[static_cast<ClauseId>(id)];
      if (c.origin() == Origin::Blocking) {
        if (oracle_on_)
          filter_by_clause(c);
        dual_dirty_ = true;
      } else if (c.origin() == Origin::Learned && oracle_on_) {
        // A learned clause must be entailed by the formula (plus the
        // negated DNF in redundant mode); it may not cut any model off.
        for (uint32_t bits : model_bits_) {
          bool sat = false;
          for (Lit l : c)
            if (model_satisfies(bits, l, var_index_)) {
              sat = true;
              break;
            }
          if (!sat)
            throw InvariantViolation(mode_ == Mode::Redundant ? "ImplIRed" : "ImplI",
                                     "learned clause not entailed");
        }
      }
    }
    p_seen_ = pf.size();
    if (count_n_clauses() != n_seen_) {
      for (uint64_t id = n_seen_; id < ds_.n.formula().size(); ++id)
        if (ds_.n.formula()[static_cast<ClauseId>(id)].origin() == Origin::NegationEncoding)
          dual_dirty_ = true;
      n_seen_ = count_n_clauses();
    }
  }

  void absorb_new_cubes() {
    for (size_t i = cubes_seen_; i < models_.size(); ++i) {
      const Cube &m = models_[i];
      if (mode_ == Mode::Irredundant) {
        for (size_t j = 0; j < i; ++j)
          if (!models_[j].clashes_with(m))
            throw InvariantViolation("DSOP", "cube " + cube_to_string(m) +
                                                 " does not clash with " +
                                                 cube_to_string(models_[j]));
      } else if (oracle_on_) {
        filter_by_negated_cube(m);
      }
    }
    cubes_seen_ = models_.size();
  }

  void check_dual_pn() {
    if (!oracle_on_)
      return;
    try {
      if (!oracle::dual_pn_holds(p_view(), n_view(), ds_.partition,
                                 ds_.current_selector_assumption()))
        throw InvariantViolation("DualPN", "P and N are not negations of each other");
    } catch (const oracle::CapExceeded &) {
      // beyond the Tseitin cap; structural checks still apply
    }
  }

  // ImplI (irredundant) / ImplIRed (redundant): every model of the pair's
  // P side (and of the negated DNF) consistent with the decisions up to
  // level n satisfies the whole trail up to level n.
  void check_impl_trail() const {
    if (!oracle_on_)
      return;
    const Trail &t = ds_.p.trail();
    const char *name = mode_ == Mode::Redundant ? "ImplIRed" : "ImplI";
    for (uint32_t bits : model_bits_) {
      for (const TrailEntry &e : t.entries()) {
        if (model_satisfies(bits, e.lit, var_index_))
          continue;
        if (e.kind == EntryKind::Decision)
          break; // deeper levels are unconstrained for this model
        throw InvariantViolation(
            name, "trail literal " + std::to_string(e.lit.to_dimacs()) +
                      " at level " + std::to_string(e.level) +
                      " is not implied by the decisions above it");
      }
    }
  }

  const DualState &ds_;
  const DnfAccumulator &models_;
  Mode mode_;
  std::vector<Var> inputs_;
  std::vector<int> var_index_;
  std::vector<uint32_t> model_bits_;
  std::vector<uint8_t> last_measure_;
  uint64_t p_seen_ = 0;
  uint64_t n_seen_ = 0;
  size_t cubes_seen_ = 0;
  bool oracle_on_ = false;
  bool dual_dirty_ = false;
};

Enumerator::Enumerator(const ProblemInstance &instance, EnumOptions options)
    : options_(std::move(options)), dual_(encode_negation(instance)),
      models_(options_.mode) {
  dual_.omit_negation_update = options_.omit_negation_update;
  if (options_.check_invariants) {
    dual_.p.set_runtime_checks(true);
    dual_.n.set_runtime_checks(true);
    checker_ = std::make_unique<InvariantChecker>(dual_, models_, options_.mode,
                                                  options_.oracle_budget);
  }
}

Enumerator::~Enumerator() = default;

void Enumerator::record(RuleKind rule) {
  if (options_.record_rules)
    rules_.push_back(rule);
}

void Enumerator::boundary(RuleKind rule) {
  if (checker_)
    checker_->on_boundary(rule);
}

bool Enumerator::handle_conflict(ClauseRef conflict) {
  ++stats_.conflicts;
  if (level_of(dual_.p.trail(), dual_.p.clause_of(conflict)) == 0) {
    record(RuleKind::EBot);
    cause_ = TerminationCause::Exhausted;
    return false;
  }
  if (options_.limits.max_conflicts && stats_.conflicts >= *options_.limits.max_conflicts) {
    cause_ = TerminationCause::ConflictLimit;
    return false;
  }
  AnalyzeResult ar = dual_.p.analyze_first_uip(conflict);
  dual_.p.backtrack(ar.backjump_level);
  if (options_.check_invariants) {
    const Clause &learned = dual_.p.clause_of(ar.learned);
    for (Lit l : learned)
      if (l != ar.asserting && dual_.p.value(l) != Value::False)
        throw InvariantViolation("LearnedUnit",
                                 "learned clause not unit after backjumping");
  }
  dual_.p.assert_literal(ar.asserting, ar.learned);
  record(RuleKind::BBot);
  boundary(RuleKind::BBot);
  return true;
}

bool Enumerator::handle_total_model() {
  ++stats_.shrink_calls;
  const Trail &trail = dual_.p.trail();
  Cube istar = shrink(trail, dual_);

  if (options_.check_invariants) {
    // Assuming the core alone reproduces the conflict in N.
    std::vector<Lit> again(istar.begin(), istar.end());
    again.push_back(dual_.current_selector_assumption());
    if (dual_.n.solve_under_assumptions(again).sat)
      throw InvariantViolation("ShrinkCore",
                               "re-assuming the shrunk core does not reproduce the conflict");
    // The core clashes with every cube blocked so far.
    for (const Clause &c : dual_.p.formula()) {
      if (c.origin() != Origin::Blocking)
        continue;
      bool clashes = false;
      for (Lit l : c)
        if (istar.contains(l)) {
          clashes = true;
          break;
        }
      if (!clashes)
        throw InvariantViolation("ShrinkDisjoint",
                                 "shrunk core overlaps a previously blocked cube");
    }
  }

  int shrunk_level = 0; // delta(m): deepest trail level among the cube
  for (Lit l : istar)
    if (dual_.partition.is_relevant(l.var()))
      shrunk_level = std::max(shrunk_level, trail.level_of_var(l.var()));

  // The blocked cube is every relevant decision up to delta(m): the core
  // may skip decisions below its deepest literal, and blocking only the
  // surviving ones would cut off models whose cover depends on the
  // skipped decisions. Recording their union keeps the cover exact and
  // the recorded cubes pairwise clashing.
  Cube block_cube; // relevant decisions at levels 1..delta(m), trail order
  Cube m;          // recorded cube: shrunk relevant literals + block_cube
  for (const TrailEntry &e : trail.entries()) {
    if (!dual_.partition.is_relevant(e.lit.var()))
      continue;
    bool decision_in_scope = e.kind == EntryKind::Decision && e.level <= shrunk_level;
    if (decision_in_scope)
      block_cube.push(e.lit);
    if (decision_in_scope || istar.contains(e.lit))
      m.push(e.lit);
  }

  bool relevant_decision = false;
  for (const TrailEntry &e : trail.entries())
    if (e.kind == EntryKind::Decision && dual_.partition.is_relevant(e.lit.var())) {
      relevant_decision = true;
      break;
    }

  models_.append(m);
  if (options_.on_model)
    options_.on_model(m);

  if (!relevant_decision) {
    record(RuleKind::ETop);
    cause_ = TerminationCause::Exhausted;
    return false;
  }

  if (block_cube.empty()) {
    // delta(m) = 0: the cube is forced at level zero, so it covers every
    // model still reachable and the search is done.
    record(RuleKind::BTop);
    cause_ = TerminationCause::EmptyBlock;
    return false;
  }

  if (options_.limits.max_models && models_.size() >= *options_.limits.max_models) {
    record(RuleKind::BTop);
    cause_ = TerminationCause::ModelLimit;
    return false;
  }

  // Highest decision level first, so the blocking clause watches its
  // asserting literal and the deepest other one.
  std::vector<Lit> decs(block_cube.begin(), block_cube.end());
  std::reverse(decs.begin(), decs.end());
  Cube ordered(decs);

  int flip_level = trail.level_of_var(decs.front().var());
  Lit flip = ~decs.front();
  ClauseRef reason;
  if (options_.mode == Mode::Irredundant) {
    reason = dual_.block_model(ordered);
    dual_.p.backtrack(flip_level - 1);
  } else {
    // Backtrack first: virtual reasons live in a stack and the flip may
    // pop older ones.
    dual_.p.backtrack(flip_level - 1);
    std::vector<Lit> lits;
    for (Lit l : ordered)
      lits.push_back(~l);
    reason = dual_.p.install_virtual_reason(Clause(std::move(lits), Origin::VirtualReason));
  }
  dual_.p.assert_literal(flip, reason);
  record(RuleKind::BTop);
  boundary(RuleKind::BTop);
  return true;
}

EnumResult Enumerator::run() {
  const int input_vars = dual_.p.var_count();
  while (true) {
    int before = dual_.p.trail().size();
    auto conflict = dual_.p.propagate();
    int appended = dual_.p.trail().size() - before;
    if (appended > 0) {
      for (int i = 0; i < appended; ++i)
        record(RuleKind::Unit);
      boundary(RuleKind::Unit);
    }

    if (conflict) {
      if (!handle_conflict(*conflict))
        break;
      continue;
    }

    if (dual_.p.trail().size() == input_vars) {
      if (!handle_total_model())
        break;
      continue;
    }

    DecideResult d = dual_.p.decide(dual_.partition);
    assert(d.kind != DecideResult::AllAssigned);
    ++stats_.decisions;
    RuleKind rule = d.kind == DecideResult::DecidedRelevant ? RuleKind::DecX : RuleKind::DecYS;
    record(rule);
    boundary(rule);
  }

  if (checker_)
    checker_->finalize();
  stats_.propagations = dual_.p.propagations();
  EnumResult result;
  result.models = models_;
  result.stats = stats_;
  result.cause = cause_;
  result.rules = rules_;
  return result;
}

InvariantReport Enumerator::check_invariants(int oracle_budget) const {
  InvariantChecker snapshot(dual_, models_, options_.mode, oracle_budget);
  return snapshot.report(oracle_budget);
}

EnumResult enumerate(const ProblemInstance &instance, EnumOptions options) {
  Enumerator e(instance, std::move(options));
  return e.run();
}

} // namespace dualenum
