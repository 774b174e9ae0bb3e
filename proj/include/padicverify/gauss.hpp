#pragma once

#include <string>
#include <vector>

#include "padicverify/cyclo.hpp"
#include "padicverify/cyclolog.hpp"
#include "padicverify/teichmuller.hpp"

namespace pv {

// Gauss-sum convention.  Standard is tau(omega^{-a}) = sum_t omega(t)^{-a}
// zeta^t; the alternatives exist so a failed multiplicative Gross-Koblitz
// check can be retried and the validating convention recorded as data.
enum class GaussConvention {
  Standard,          // sum_t omega(t)^{-a} zeta^t
  ConjugateExponent, // sum_t omega(t)^{+a} zeta^t
  ZetaSquared,       // sum_t omega(t)^{-a} zeta^{2t}
};

std::string convention_name(GaussConvention c);
GaussConvention parse_convention(const std::string& name);

// All conventions in retry order.
const std::vector<GaussConvention>& all_conventions();

CycloElement gauss_sum(long a, const TeichmullerTable& table,
                       GaussConvention conv = GaussConvention::Standard);

// Root pi of x^{p-1} + p with pi ≡ zeta - 1 modulo the square of the
// maximal ideal, by Newton iteration from zeta - 1.  The iteration sits
// outside the textbook Hensel bound (v(f(x0)) = p/(p-1) is not larger than
// 2 v(f'(x0)) = 2(p-2)/(p-1) once p >= 5) but x0 is strictly closer to one
// root than to the others, and each step provably gains at least 1/(p-1)
// in distance-to-root valuation, turning quadratic once clear of the pack.
struct DworkUniformizer {
  CycloElement piP;
};

DworkUniformizer dwork_pi(long p, long digits);

// v(a) = log tau(omega^{-a}), projected to Q_p.  The non-constant
// coordinates must not resolve nonzero (Galois invariance); that event
// signals an arithmetic bug and throws RationalityError.
PadicScalar v_of(long a, const TeichmullerTable& table,
                 GaussConvention conv = GaussConvention::Standard);

// The paper-protocol log tables: v(a) (scalar), L_a = log(1 - zeta^a) and
// w(a) = -L_a (ring elements), for a = 1..p-1, plus the residual evidence
// left in the discarded non-constant coordinates of each v(a).
struct LogTable {
  long prime = 0;
  long digits = 0;
  GaussConvention convention = GaussConvention::Standard;
  std::vector<PadicScalar> v;
  std::vector<CycloElement> L;
  std::vector<CycloElement> w;
  std::vector<FloorInfo> v_nonconstant;

  const PadicScalar& v_at(long a) const { return v[static_cast<size_t>(a - 1)]; }
  const CycloElement& L_at(long a) const { return L[static_cast<size_t>(a - 1)]; }
  const CycloElement& w_at(long a) const { return w[static_cast<size_t>(a - 1)]; }
};

LogTable build_log_table(const TeichmullerTable& table, GaussConvention conv);

// Residual evidence for the Gross-Koblitz identity at index a:
// multiplicative, tau(omega^{-a}) + pi^a Gamma_p(a/(p-1)) (a <= p-2 only),
// and log-level, v(a) - log Gamma_p(a/(p-1)), both at M gamma digits.
struct GrossKoblitzResidual {
  long a = 0;
  GaussConvention convention = GaussConvention::Standard;
  bool has_multiplicative = false;
  FloorInfo multiplicative;
  FloorInfo log_level;
  bool multiplicative_pass = false;
  bool log_pass = false;
};

GrossKoblitzResidual gross_koblitz_check(long a, const TeichmullerTable& table,
                                         const DworkUniformizer& dwork,
                                         long gamma_digits, long cost_bound,
                                         GaussConvention conv);

}  // namespace pv
