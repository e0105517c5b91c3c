#include "dualenum/dual.hpp"

#include <cassert>

namespace dualenum {

DualState encode_negation(const CnfFormula &f, const std::set<Var> &relevant) {
  DualState ds;
  const int input_vars = f.var_count();

  for (Var v = 1; v <= input_vars; ++v)
    ds.partition.assign(v, relevant.count(v) ? VarClass::Relevant : VarClass::Irrelevant);

  ds.p.ensure_vars(input_vars);
  for (const Clause &c : f)
    ds.p.add_input_clause(Clause(c.lits(), Origin::Input));

  ds.n.ensure_vars(input_vars);
  std::vector<Lit> top;
  for (const Clause &c : f) {
    Var t = ds.n.new_var();
    ds.partition.assign(t, VarClass::NegTseitin);
    Lit tl(t, true);
    for (Lit l : c)
      ds.n.add_input_clause(Clause({~tl, ~l}, Origin::NegationEncoding));
    std::vector<Lit> back(c.begin(), c.end());
    back.push_back(tl);
    ds.n.add_input_clause(Clause(std::move(back), Origin::NegationEncoding));
    top.push_back(tl);
  }
  Var sigma0 = ds.n.new_var();
  ds.partition.assign(sigma0, VarClass::NegTseitin);
  ds.selectors_.push_back(sigma0);
  top.push_back(Lit(sigma0, true));
  ds.n.add_input_clause(Clause(std::move(top), Origin::NegationEncoding));
  return ds;
}

ClauseRef DualState::block_model(const Cube &m) {
  assert(!m.empty());

  std::vector<Lit> blocking;
  blocking.reserve(m.size());
  for (Lit l : m)
    blocking.push_back(~l);
  ClauseRef id = p.add_derived_clause(Clause(std::move(blocking), Origin::Blocking));

  if (!omit_negation_update) {
    Var t = n.new_var();
    partition.assign(t, VarClass::NegTseitin);
    model_tseitins_.push_back(t);
    Lit tl(t, true);
    for (Lit l : m)
      n.add_derived_clause(Clause({~tl, l}, Origin::NegationEncoding));
    if (encode_reverse_implication) {
      std::vector<Lit> back;
      for (Lit l : m)
        back.push_back(~l);
      back.push_back(tl);
      n.add_derived_clause(Clause(std::move(back), Origin::NegationEncoding));
    }
    Var sigma = n.new_var();
    partition.assign(sigma, VarClass::NegTseitin);
    Lit prev(selectors_.back(), true);
    n.add_derived_clause(Clause({~prev, tl, Lit(sigma, true)}, Origin::NegationEncoding));
    selectors_.push_back(sigma);
  }
  ++blocking_count_;
  return id;
}

} // namespace dualenum
