#pragma once

#include <vector>

#include "padicverify/bernoulli.hpp"
#include "padicverify/jet.hpp"
#include "padicverify/teichmuller.hpp"

namespace pv {

// chi = omega^exponent on (Z/pZ)^x, zero on multiples of p.
struct DirichletCharacter {
  long prime = 0;
  long exponent = 0;

  bool is_trivial() const { return exponent == 0; }
  bool is_odd() const { return exponent % 2 == 1; }
};

// The odd nontrivial characters mod p, exponents ascending; count (p-1)/2.
std::vector<DirichletCharacter> enumerate_odd_nontrivial(long p);

PadicScalar chi_value(const DirichletCharacter& chi, long a,
                      const TeichmullerTable& table);

// L(0,chi) = -(1/p) sum_a a chi(a), exact finite sum (chi nontrivial).
PadicScalar L_at_zero(const DirichletCharacter& chi,
                      const TeichmullerTable& table);

// Last series index j whose dropped-term valuation bound falls short of the
// working precision; the Bernoulli cache must cover indices 0..this value.
long kl_truncation_index(long p, long working);

// Kubota-Leopoldt evaluation of L_p(s, chi*omega) as a jet at s = 0:
// returns (L_p(0, chi*omega), L_p'(0, chi*omega)).  The value component is
// checked against L_at_zero(chi) (they agree identically when chi(p) = 0);
// a resolved mismatch signals a bug and throws.
Jet kubota_leopoldt(const DirichletCharacter& chi,
                    const TeichmullerTable& table, const BernoulliCache& bern);

// Same series evaluated at a plain scalar point s (finite-difference oracle).
PadicScalar kubota_leopoldt_at(const DirichletCharacter& chi,
                               const PadicScalar& s,
                               const TeichmullerTable& table,
                               const BernoulliCache& bern);

PadicScalar lp_derivative_at_zero(const DirichletCharacter& chi,
                                  const TeichmullerTable& table,
                                  const BernoulliCache& bern);

}  // namespace pv
