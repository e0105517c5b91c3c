#ifndef DUALENUM_ERRORS_HPP
#define DUALENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dualenum {

// A runtime check found the engine in a state it must never reach.
class InvariantViolation : public std::runtime_error {
public:
  InvariantViolation(const std::string &invariant, const std::string &detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(invariant) {}

  const std::string &invariant() const { return invariant_; }

private:
  std::string invariant_;
};

} // namespace dualenum

#endif
