#pragma once

#include "padicverify/cyclo.hpp"

namespace pv {

// Coordinate-wise multiplication by p^k (exact).
CycloElement shift_element(const CycloElement& x, long k);

// Branch-fixed logarithm on Q_p(zeta_p)^x with log p = 0 and log of any
// root of unity = 0.  Reduction: m = (p-1) * val(x) is an integer;
// y = x^{p-1} / p^m is a unit, z = y^{p-1} is principal, and
// log x = log1p(z - 1) / (p-1)^2.  The series runs in a fixed-point
// representation (integer coordinates modulo p^A, A = absolute precision of
// z - 1) with one exact convolution per term; the result's per-coordinate
// absolute floor is A - D where p^D is the largest index denominator.
CycloElement iwasawa_log(const CycloElement& x);

// log(1 - zeta^a), built from exact coordinates with the stated digit budget.
CycloElement cyclo_unit_log(long p, long a, long digits);

}  // namespace pv
