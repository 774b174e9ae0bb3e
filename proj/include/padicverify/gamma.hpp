#pragma once

#include "padicverify/bigint.hpp"
#include "padicverify/padic.hpp"

namespace pv {

inline constexpr long kDefaultGammaCostBound = 10000000;

// Morita gamma at a nonnegative integer argument:
// Gamma_p(n) = (-1)^n * prod_{0<j<n, p∤j} j, reduced modulo p^working.
// Exact for integer arguments, so the full working budget is trusted.
PadicScalar morita_gamma_nat(long p, const BigInt& n, long working);

// Morita gamma at x in Z_p given exactly as a rational with p ∤ denominator.
// The argument is reduced to its residue n mod p^digitsM; continuity of
// Gamma_p certifies digitsM digits of the result (clamped by the working
// budget).  Throws CostBoundError when p^digitsM exceeds cost_bound.
PadicScalar morita_gamma(long p, const BigRat& x, long digitsM, long working,
                         long cost_bound = kDefaultGammaCostBound);

// Largest M with p^M <= bound (at least 1), the default per-prime choice for
// the gamma cross-check depth.
long default_gamma_digits(long p, long bound = 20000);

}  // namespace pv
