#include "dualenum/oracle.hpp"

#include <algorithm>
#include <map>

namespace dualenum::oracle {

bool Assignment::value(Var v) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v)
      return (bits >> i) & 1;
  throw std::logic_error("assignment does not cover variable");
}

bool Assignment::satisfies(const Clause &c) const {
  for (Lit l : c)
    if (value(l.var()) == l.positive())
      return true;
  return false;
}

bool Assignment::satisfies(const Cube &m) const {
  for (Lit l : m)
    if (value(l.var()) != l.positive())
      return false;
  return true;
}

bool Assignment::satisfies(const CnfFormula &f) const {
  for (const Clause &c : f)
    if (!satisfies(c))
      return false;
  return true;
}

std::vector<Lit> Assignment::literals() const {
  std::vector<Lit> out;
  for (size_t i = 0; i < vars.size(); ++i)
    out.emplace_back(vars[i], ((bits >> i) & 1) != 0);
  return out;
}

namespace {

void check_cap(size_t n, int cap, const char *what) {
  if (static_cast<int>(n) > cap)
    throw CapExceeded(std::string(what) + " cap exceeded: " + std::to_string(n) + " > " +
                      std::to_string(cap));
}

} // namespace

std::vector<Assignment> total_models(const CnfFormula &f, const std::vector<Var> &vars) {
  check_cap(vars.size(), kTotalCap, "variable");
  for (const Clause &c : f)
    for (Lit l : c)
      if (std::find(vars.begin(), vars.end(), l.var()) == vars.end())
        throw std::logic_error("formula variable missing from enumeration set");
  std::vector<Assignment> out;
  const uint64_t n = uint64_t(1) << vars.size();
  for (uint64_t bits = 0; bits < n; ++bits) {
    Assignment a{vars, static_cast<uint32_t>(bits)};
    if (a.satisfies(f))
      out.push_back(a);
  }
  return out;
}

std::vector<Assignment> projected_models(const CnfFormula &f, const std::vector<Var> &all_vars,
                                         const std::vector<Var> &x) {
  std::vector<Assignment> models = total_models(f, all_vars);
  std::set<uint32_t> seen;
  std::vector<Assignment> out;
  for (const Assignment &a : models) {
    uint32_t bits = 0;
    for (size_t i = 0; i < x.size(); ++i)
      if (a.value(x[i]))
        bits |= uint32_t(1) << i;
    if (seen.insert(bits).second)
      out.push_back(Assignment{x, bits});
  }
  return out;
}

bool covers_equal(const DnfAccumulator &m, const CnfFormula &f, const std::vector<Var> &all_vars,
                  const std::vector<Var> &x) {
  check_cap(x.size(), kTotalCap, "variable");
  std::vector<Assignment> projected = projected_models(f, all_vars, x);
  std::set<uint32_t> expected;
  for (const Assignment &a : projected)
    expected.insert(a.bits);

  std::set<uint32_t> covered;
  const uint64_t n = uint64_t(1) << x.size();
  for (uint64_t bits = 0; bits < n; ++bits) {
    Assignment a{x, static_cast<uint32_t>(bits)};
    for (const Cube &cube : m)
      if (a.satisfies(cube)) {
        covered.insert(a.bits);
        break;
      }
  }
  return covered == expected;
}

bool is_dsop(const DnfAccumulator &m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (!m[i].clashes_with(m[j]))
        return false;
  return true;
}

bool satisfiable_over(const std::vector<std::vector<Lit>> &clauses,
                      const std::vector<Var> &free_vars) {
  // Exhaustive search with early pruning: descend only while no clause
  // is fully falsified and assign forced literals without branching.
  std::map<Var, int> value; // -1 false, 1 true, absent = free
  for (Var v : free_vars)
    value[v] = 0;

  struct Frame {
    Var var;
    bool forced;
  };
  std::vector<Frame> stack;

  auto eval = [&](bool &falsified, Var &unit_var, bool &unit_sign) {
    falsified = false;
    unit_var = 0;
    for (const auto &c : clauses) {
      bool sat = false;
      int free = 0;
      Lit last_free{};
      for (Lit l : c) {
        int v = value[l.var()];
        if (v == 0) {
          ++free;
          last_free = l;
        } else if ((v > 0) == l.positive()) {
          sat = true;
          break;
        }
      }
      if (sat)
        continue;
      if (free == 0) {
        falsified = true;
        return;
      }
      if (free == 1 && unit_var == 0) {
        unit_var = last_free.var();
        unit_sign = last_free.positive();
      }
    }
  };

  size_t next = 0;
  while (true) {
    bool falsified, unit_sign = false;
    Var unit_var;
    eval(falsified, unit_var, unit_sign);
    if (!falsified) {
      if (unit_var != 0) {
        value[unit_var] = unit_sign ? 1 : -1;
        stack.push_back({unit_var, true});
        continue;
      }
      while (next < free_vars.size() && value[free_vars[next]] != 0)
        ++next;
      if (next == free_vars.size())
        return true; // every clause satisfiable, remaining vars free
      Var v = free_vars[next];
      value[v] = 1;
      stack.push_back({v, false});
      continue;
    }
    // Backtrack to the last open branch.
    for (;;) {
      if (stack.empty())
        return false;
      Frame f = stack.back();
      stack.pop_back();
      if (f.forced || value[f.var] < 0) {
        value[f.var] = 0;
        continue;
      }
      value[f.var] = -1;
      stack.push_back({f.var, false});
      break;
    }
    next = 0;
  }
}

bool dual_pn_holds(const CnfFormula &p, const CnfFormula &n, const VariablePartition &partition,
                   Lit selector_assumption) {
  std::vector<Var> inputs = partition.input_vars();
  std::vector<Var> s_vars = partition.vars_in(VarClass::PosTseitin);
  std::vector<Var> t_vars = partition.vars_in(VarClass::NegTseitin);
  check_cap(inputs.size(), kInputCap, "input variable");
  check_cap(s_vars.size(), kTseitinCap, "S variable");
  check_cap(t_vars.size(), kTseitinCap, "T variable");

  // Reduce a formula by a fixed input assignment, keeping clauses over
  // the auxiliary variables only.
  auto reduce = [&](const CnfFormula &f, const Assignment &a, Lit extra,
                    bool has_extra) -> std::optional<std::vector<std::vector<Lit>>> {
    std::vector<std::vector<Lit>> out;
    for (const Clause &c : f) {
      std::vector<Lit> rest;
      bool sat = false;
      for (Lit l : c) {
        if (has_extra && l.var() == extra.var()) {
          if (l == extra) {
            sat = true;
            break;
          }
          continue;
        }
        if (partition.is_input(l.var())) {
          if (a.value(l.var()) == l.positive()) {
            sat = true;
            break;
          }
        } else {
          rest.push_back(l);
        }
      }
      if (sat)
        continue;
      if (rest.empty())
        return std::nullopt; // clause falsified outright
      out.push_back(std::move(rest));
    }
    return out;
  };

  const uint64_t count = uint64_t(1) << inputs.size();
  for (uint64_t bits = 0; bits < count; ++bits) {
    Assignment a{inputs, static_cast<uint32_t>(bits)};
    bool p_sat = false;
    if (auto reduced = reduce(p, a, Lit{}, false))
      p_sat = satisfiable_over(*reduced, s_vars);
    bool n_sat = false;
    if (auto reduced = reduce(n, a, selector_assumption, true)) {
      std::vector<Var> free_t;
      for (Var v : t_vars)
        if (v != selector_assumption.var())
          free_t.push_back(v);
      n_sat = satisfiable_over(*reduced, free_t);
    }
    if (p_sat == n_sat)
      return false;
  }
  return true;
}

} // namespace dualenum::oracle
