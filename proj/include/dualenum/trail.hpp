#ifndef DUALENUM_TRAIL_HPP
#define DUALENUM_TRAIL_HPP

#include "dualenum/clause.hpp"
#include "dualenum/literal.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

namespace dualenum {

// Reason handle: formula clause id, virtual-reason table id, or none.
// Virtual reasons live in a side table of the owning solver.
using ClauseRef = uint32_t;
inline constexpr ClauseRef kNoReason = std::numeric_limits<ClauseRef>::max();
inline constexpr ClauseRef kVirtualBit = ClauseRef(1) << 31;

inline bool is_virtual_ref(ClauseRef r) { return r != kNoReason && (r & kVirtualBit) != 0; }

// Decision level of an unassigned variable.
inline constexpr int kLevelUnassigned = std::numeric_limits<int>::max();

enum class EntryKind : uint8_t { Decision, Propagated, Assumed };

struct TrailEntry {
  Lit lit;
  EntryKind kind;
  int level;
  ClauseRef reason; // kNoReason unless kind == Propagated
};

enum class Value : int8_t { False = -1, Unassigned = 0, True = 1 };

// Assignment sequence with per-variable value and decision level lookup.
// Decisions and assumptions open levels; entry levels never decrease
// along the sequence.
class Trail {
public:
  void ensure_vars(int var_count) {
    if (var_count + 1 > static_cast<int>(value_.size())) {
      value_.resize(var_count + 1, Value::Unassigned);
      level_.resize(var_count + 1, kLevelUnassigned);
    }
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const TrailEntry &operator[](int i) const { return entries_[i]; }
  const std::vector<TrailEntry> &entries() const { return entries_; }

  int current_level() const { return current_level_; }

  Value value_of_var(Var v) const { return value_[v]; }
  Value value(Lit l) const {
    Value v = value_[l.var()];
    if (v == Value::Unassigned)
      return v;
    return (v == Value::True) == l.positive() ? Value::True : Value::False;
  }
  bool assigned(Var v) const { return value_[v] != Value::Unassigned; }

  int level_of_var(Var v) const { return level_[v]; }

  void push_decision(Lit l) { push(l, EntryKind::Decision, ++current_level_, kNoReason); }
  void push_assumed(Lit l) { push(l, EntryKind::Assumed, ++current_level_, kNoReason); }
  void push_propagated(Lit l, ClauseRef reason) {
    push(l, EntryKind::Propagated, current_level_, reason);
  }

  // Removes all entries above `level`, most recent first. `on_pop` sees
  // each removed entry (used to drop virtual reasons).
  template <typename F> void pop_to_level(int level, F &&on_pop) {
    assert(level <= current_level_);
    while (!entries_.empty() && entries_.back().level > level) {
      const TrailEntry &e = entries_.back();
      value_[e.lit.var()] = Value::Unassigned;
      level_[e.lit.var()] = kLevelUnassigned;
      on_pop(e);
      entries_.pop_back();
    }
    current_level_ = level;
  }
  void pop_to_level(int level) {
    pop_to_level(level, [](const TrailEntry &) {});
  }

  // Structural well-formedness: distinct variables, non-decreasing entry
  // levels, exactly one level opener (decision/assumption) per level >= 1,
  // level map consistent with entries.
  bool well_formed(std::string *why = nullptr) const;

  // Bypasses the opener bookkeeping; only for building malformed trails
  // in tests of the well-formedness check itself.
  void push_unchecked(Lit l, EntryKind kind, int level, ClauseRef reason) {
    value_[l.var()] = l.positive() ? Value::True : Value::False;
    level_[l.var()] = level;
    entries_.push_back(TrailEntry{l, kind, level, reason});
    current_level_ = std::max(current_level_, level);
  }

private:
  void push(Lit l, EntryKind kind, int level, ClauseRef reason) {
    assert(value(l) == Value::Unassigned);
    value_[l.var()] = l.positive() ? Value::True : Value::False;
    level_[l.var()] = level;
    entries_.push_back(TrailEntry{l, kind, level, reason});
  }

  std::vector<TrailEntry> entries_;
  std::vector<Value> value_;
  std::vector<int> level_;
  int current_level_ = 0;
};

// Decision literals of a trail, in trail order.
Cube decisions_of(const Trail &trail);

// Decision level function extended to literals, clauses and trails:
// max over members, 0 for the empty clause or trail.
inline int level_of(const Trail &trail, Lit l) { return trail.level_of_var(l.var()); }

int level_of(const Trail &trail, const Clause &c);
int level_of(const Trail &trail);

// Residual of a formula under a trail.
struct Residual {
  enum Kind { Satisfied, Falsified, Reduced } kind;
  ClauseId falsified_clause = 0; // valid when kind == Falsified
  std::vector<Lit> units;        // forced literals when kind == Reduced
};

Residual residual(const CnfFormula &f, const Trail &trail);

} // namespace dualenum

#endif
