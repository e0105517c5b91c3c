#ifndef DUALENUM_CLAUSE_HPP
#define DUALENUM_CLAUSE_HPP

#include "dualenum/literal.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace dualenum {

using ClauseId = uint32_t;

enum class Origin : uint8_t {
  Input,            // from the parsed problem
  Learned,          // first-UIP conflict analysis
  Blocking,         // negated decisions of an enumerated cube
  VirtualReason,    // trail-only reason, never part of the formula
  NegationEncoding, // clauses defining the negated formula
};

// Disjunction of literals over distinct variables.
class Clause {
public:
  Clause() = default;
  Clause(std::vector<Lit> lits, Origin origin) : lits_(std::move(lits)), origin_(origin) {}

  // Merges duplicate literals; returns nothing for tautologies (l and ~l).
  static std::optional<Clause> normalized(const std::vector<Lit> &lits, Origin origin) {
    std::vector<Lit> out;
    out.reserve(lits.size());
    for (Lit l : lits) {
      bool dup = false;
      for (Lit k : out) {
        if (k == l) {
          dup = true;
          break;
        }
        if (k == ~l)
          return std::nullopt;
      }
      if (!dup)
        out.push_back(l);
    }
    return Clause(std::move(out), origin);
  }

  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  Lit operator[](size_t i) const { return lits_[i]; }
  Lit &operator[](size_t i) { return lits_[i]; }
  const std::vector<Lit> &lits() const { return lits_; }
  Origin origin() const { return origin_; }

  bool contains(Lit l) const { return std::find(lits_.begin(), lits_.end(), l) != lits_.end(); }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

private:
  std::vector<Lit> lits_;
  Origin origin_ = Origin::Input;
};

// Conjunction of literals over distinct variables, kept in insertion order.
class Cube {
public:
  Cube() = default;
  explicit Cube(std::vector<Lit> lits) : lits_(std::move(lits)) {}

  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  Lit operator[](size_t i) const { return lits_[i]; }
  const std::vector<Lit> &lits() const { return lits_; }

  bool contains(Lit l) const { return std::find(lits_.begin(), lits_.end(), l) != lits_.end(); }
  bool contains_var(Var v) const {
    return std::any_of(lits_.begin(), lits_.end(), [v](Lit l) { return l.var() == v; });
  }

  void push(Lit l) {
    assert(!contains_var(l.var()));
    lits_.push_back(l);
  }

  // Two cubes clash when some variable occurs with opposite polarity.
  bool clashes_with(const Cube &other) const {
    for (Lit l : lits_)
      if (other.contains(~l))
        return true;
    return false;
  }

  bool same_literals(const Cube &other) const {
    if (lits_.size() != other.lits_.size())
      return false;
    for (Lit l : lits_)
      if (!other.contains(l))
        return false;
    return true;
  }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

private:
  std::vector<Lit> lits_;
};

// A CNF as an indexed clause collection. The empty formula is true; a
// formula containing the empty clause is unsatisfiable.
class CnfFormula {
public:
  CnfFormula() = default;
  explicit CnfFormula(int var_count) : var_count_(var_count) {}

  ClauseId add(Clause c) {
    for (Lit l : c)
      if (l.var() > var_count_)
        var_count_ = l.var();
    clauses_.push_back(std::move(c));
    return static_cast<ClauseId>(clauses_.size() - 1);
  }

  size_t size() const { return clauses_.size(); }
  const Clause &operator[](ClauseId id) const { return clauses_[id]; }
  Clause &operator[](ClauseId id) { return clauses_[id]; }

  int var_count() const { return var_count_; }
  void set_var_count(int n) { var_count_ = std::max(var_count_, n); }

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

private:
  std::vector<Clause> clauses_;
  int var_count_ = 0;
};

} // namespace dualenum

#endif
