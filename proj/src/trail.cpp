#include "dualenum/trail.hpp"

#include <set>
#include <sstream>
#include <string>

namespace dualenum {

bool Trail::well_formed(std::string *why) const {
  auto fail = [&](const std::string &msg) {
    if (why)
      *why = msg;
    return false;
  };

  std::set<Var> seen;
  int prev_level = 0;
  std::set<int> opened;
  for (int i = 0; i < size(); ++i) {
    const TrailEntry &e = entries_[i];
    if (!seen.insert(e.lit.var()).second)
      return fail("variable assigned twice on trail");
    if (e.level < prev_level)
      return fail("entry levels decrease along trail");
    bool opener = e.kind == EntryKind::Decision || e.kind == EntryKind::Assumed;
    if (opener) {
      if (e.level != prev_level + 1)
        return fail("level opener does not open previous level + 1");
      if (!opened.insert(e.level).second)
        return fail("two level openers at one level");
    } else if (e.level > 0 && opened.find(e.level) == opened.end()) {
      return fail("propagated entry at a level without an opener");
    }
    if (level_[e.lit.var()] != e.level)
      return fail("level map disagrees with entry level");
    if (value(e.lit) != Value::True)
      return fail("value map disagrees with entry literal");
    prev_level = e.level;
  }
  // Every level up to the current one must have been opened.
  for (int d = 1; d <= current_level_; ++d)
    if (opened.find(d) == opened.end())
      return fail("level " + std::to_string(d) + " has no opener");
  if (static_cast<int>(opened.size()) != current_level_)
    return fail("opener above current level");
  return true;
}

Cube decisions_of(const Trail &trail) {
  Cube out;
  for (const TrailEntry &e : trail.entries())
    if (e.kind == EntryKind::Decision)
      out.push(e.lit);
  return out;
}

int level_of(const Trail &trail, const Clause &c) {
  int lvl = 0;
  for (Lit l : c) {
    int d = trail.level_of_var(l.var());
    if (d == kLevelUnassigned)
      return kLevelUnassigned;
    lvl = std::max(lvl, d);
  }
  return lvl;
}

int level_of(const Trail &trail) {
  int lvl = 0;
  for (const TrailEntry &e : trail.entries())
    lvl = std::max(lvl, e.level);
  return lvl;
}

Residual residual(const CnfFormula &f, const Trail &trail) {
  Residual res;
  res.kind = Residual::Satisfied;
  for (ClauseId id = 0; id < f.size(); ++id) {
    const Clause &c = f[id];
    bool sat = false;
    int free = 0;
    Lit unit;
    for (Lit l : c) {
      Value v = trail.value(l);
      if (v == Value::True) {
        sat = true;
        break;
      }
      if (v == Value::Unassigned) {
        ++free;
        unit = l;
      }
    }
    if (sat)
      continue;
    if (free == 0) {
      res.kind = Residual::Falsified;
      res.falsified_clause = id;
      res.units.clear();
      return res;
    }
    res.kind = Residual::Reduced;
    if (free == 1 &&
        std::find(res.units.begin(), res.units.end(), unit) == res.units.end())
      res.units.push_back(unit);
  }
  return res;
}

} // namespace dualenum
