#ifndef DUALENUM_DNF_HPP
#define DUALENUM_DNF_HPP

#include "dualenum/clause.hpp"

#include <vector>

namespace dualenum {

enum class Mode : uint8_t { Irredundant, Redundant };

// Ordered list of enumerated cubes over the relevant variables. In
// irredundant mode any two distinct cubes contain a clashing literal
// pair, making the disjunction a DSOP.
class DnfAccumulator {
public:
  explicit DnfAccumulator(Mode mode = Mode::Irredundant) : mode_(mode) {}

  Mode mode() const { return mode_; }
  size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  const Cube &operator[](size_t i) const { return cubes_[i]; }
  const std::vector<Cube> &cubes() const { return cubes_; }

  void append(Cube m) { cubes_.push_back(std::move(m)); }

  auto begin() const { return cubes_.begin(); }
  auto end() const { return cubes_.end(); }

private:
  std::vector<Cube> cubes_;
  Mode mode_;
};

} // namespace dualenum

#endif
