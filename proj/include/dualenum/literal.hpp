#ifndef DUALENUM_LITERAL_HPP
#define DUALENUM_LITERAL_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>

namespace dualenum {

// Variables are 1-based indices, matching DIMACS numbering.
using Var = int;

// A literal is a variable with a polarity, packed as 2*var (positive)
// or 2*var+1 (negative) so it can index watch lists directly.
class Lit {
public:
  Lit() = default;
  Lit(Var v, bool positive) : code_(2 * v + (positive ? 0 : 1)) { assert(v >= 1); }

  static Lit from_dimacs(int n) {
    assert(n != 0);
    return n > 0 ? Lit(n, true) : Lit(-n, false);
  }
  int to_dimacs() const { return positive() ? var() : -var(); }

  Var var() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1) == 0; }
  int code() const { return code_; }

  Lit operator~() const {
    Lit l;
    l.code_ = code_ ^ 1;
    return l;
  }

  bool operator==(const Lit &) const = default;
  auto operator<=>(const Lit &) const = default;

private:
  int code_ = 0; // 0 is never a valid literal (vars start at 1)
};

inline std::ostream &operator<<(std::ostream &os, Lit l) { return os << l.to_dimacs(); }

} // namespace dualenum

#endif
