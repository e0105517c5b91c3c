#ifndef DUALENUM_SHRINK_HPP
#define DUALENUM_SHRINK_HPP

#include "dualenum/dual.hpp"
#include "dualenum/trail.hpp"

namespace dualenum {

// Dual model shrinking: the total model on `trail` is projected onto the
// input variables and assumed, in trail order, in the solver over N
// (with the current selector assumed false). The resulting conflict is
// guaranteed; its core, restricted to the input variables, is a
// sub-assignment whose every total extension still satisfies the formula
// and falsifies every previously blocked cube.
//
// A sat answer from the N solver means the dual invariant is broken and
// raises InvariantViolation.
Cube shrink(const Trail &trail, DualState &ds);

} // namespace dualenum

#endif
