#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

// Edge multiplicity: a positive integer or "omega" (an infinite bundle of
// parallel edges). Parallel bundles between the same endpoints merge by
// addition; omega absorbs everything.
struct Mult {
  bool infinite = false;
  std::uint64_t count = 0;  // meaningful only when !infinite

  static Mult finite(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::ParseError, "edge multiplicity must be >= 1");
    return Mult{false, n};
  }
  static Mult omega() { return Mult{true, 0}; }

  bool is_omega() const { return infinite; }

  // Units of multiplicity clamped to [0, 2]; enough for "exactly one copy"
  // questions, where omega behaves like "at least two".
  std::uint64_t clamp2() const {
    if (infinite) return 2;
    return count > 2 ? 2 : count;
  }

  Mult& operator+=(const Mult& o) {
    if (o.infinite) infinite = true;
    if (infinite) {
      count = 0;
      return *this;
    }
    count += o.count;
    return *this;
  }

  friend bool operator==(const Mult&, const Mult&) = default;
  friend auto operator<=>(const Mult&, const Mult&) = default;
};

inline std::string to_string(const Mult& m) {
  return m.infinite ? std::string("inf") : std::to_string(m.count);
}

}  // namespace lpa
