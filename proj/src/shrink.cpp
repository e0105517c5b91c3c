#include "dualenum/shrink.hpp"

#include "dualenum/errors.hpp"

namespace dualenum {

Cube shrink(const Trail &trail, DualState &ds) {
  std::vector<Lit> assumptions;
  assumptions.reserve(trail.size() + 1);
  for (const TrailEntry &e : trail.entries())
    if (ds.partition.is_input(e.lit.var()))
      assumptions.push_back(e.lit);
  assumptions.push_back(ds.current_selector_assumption());

  SolveResult res = ds.n.solve_under_assumptions(assumptions);
  if (res.sat)
    throw InvariantViolation("DualPN",
                             "negated formula satisfiable under a total model of P");

  Cube istar;
  for (Lit l : res.core)
    if (ds.partition.is_input(l.var()))
      istar.push(l);
  return istar;
}

} // namespace dualenum
