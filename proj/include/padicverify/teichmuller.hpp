#pragma once

#include <vector>

#include "padicverify/padic.hpp"

namespace pv {

// Teichmuller roots omega(1..p-1) modulo p^digits, computed by iterating
// x -> x^p to its fixed point.  Shared read-only by everything that needs
// character values.
class TeichmullerTable {
 public:
  TeichmullerTable(long p, long digits);

  long prime() const { return prime_; }
  long digits() const { return digits_; }

  // omega(t) for any t not divisible by p (reduced mod p internally).
  PadicScalar omega(long t) const;
  // omega(t)^e as a tracked scalar, e may be negative.
  PadicScalar omega_pow(long t, long e) const;

 private:
  long prime_;
  long digits_;
  std::vector<BigInt> roots_;  // index t-1

  const BigInt& root(long t) const;
};

// Single lift without a table.
PadicScalar teichmuller(long p, long t, long digits);

// <x> = x / (p^v(x) * omega(x)), the principal-unit part in 1 + pZ_p.
PadicScalar principal_unit(const PadicScalar& x, const TeichmullerTable& table);

}  // namespace pv
