#ifndef DUALENUM_PARTITION_HPP
#define DUALENUM_PARTITION_HPP

#include "dualenum/literal.hpp"

#include <cassert>
#include <vector>

namespace dualenum {

enum class VarClass : uint8_t {
  Relevant,   // X: projection target
  Irrelevant, // Y: existentially quantified input variables
  PosTseitin, // S: auxiliary variables of the positive formula
  NegTseitin, // T: auxiliary variables of the negated formula
};

// Disjoint variable classes X, Y, S, T. Input variables (X and Y) are
// shared by both formulas; S occurs only in P and T only in N.
class VariablePartition {
public:
  VariablePartition() = default;

  void assign(Var v, VarClass c) {
    if (v + 1 > static_cast<int>(class_.size()))
      class_.resize(v + 1, VarClass::Irrelevant);
    class_[v] = c;
  }

  VarClass of(Var v) const {
    assert(v >= 1 && v < static_cast<int>(class_.size()));
    return class_[v];
  }

  bool is_relevant(Var v) const { return of(v) == VarClass::Relevant; }
  bool is_input(Var v) const {
    VarClass c = of(v);
    return c == VarClass::Relevant || c == VarClass::Irrelevant;
  }

  int var_count() const { return static_cast<int>(class_.size()) - 1; }

  std::vector<Var> vars_in(VarClass c) const {
    std::vector<Var> out;
    for (Var v = 1; v < static_cast<int>(class_.size()); ++v)
      if (class_[v] == c)
        out.push_back(v);
    return out;
  }

  std::vector<Var> input_vars() const {
    std::vector<Var> out;
    for (Var v = 1; v < static_cast<int>(class_.size()); ++v)
      if (is_input(v))
        out.push_back(v);
    return out;
  }

private:
  std::vector<VarClass> class_; // index 0 unused
};

} // namespace dualenum

#endif
