#pragma once

#include "padicverify/errors.hpp"

namespace pv {

// Digit budget for a run: N target digits are published, G guard digits
// absorb series and division losses, W = N + G digits are carried.
// Guard floor 10 + ceil(N/(p-1)) covers ramified-logarithm losses.
struct PrecisionPolicy {
  long target = 0;
  long guard = 0;

  long working() const { return target + guard; }

  static long min_guard(long p, long target) {
    return 10 + (target + p - 2) / (p - 1);
  }

  static PrecisionPolicy make(long p, long target) {
    return PrecisionPolicy{target, min_guard(p, target)};
  }

  static PrecisionPolicy make(long p, long target, long guard) {
    if (target < 1) throw DomainError("PrecisionPolicy: target must be >= 1");
    if (guard < min_guard(p, target)) {
      throw DomainError("PrecisionPolicy: guard below required minimum");
    }
    return PrecisionPolicy{target, guard};
  }
};

}  // namespace pv
