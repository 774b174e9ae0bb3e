#pragma once

#include <string>
#include <vector>

#include "padicverify/bigint.hpp"
#include "padicverify/floors.hpp"
#include "padicverify/padic.hpp"

namespace pv {

// Valuation of a ring element, in units of v(p) = 1, so the value group is
// (1/(p-1)) * Z.  Exact means the minimum over basis coordinates resolved
// unambiguously; Floor means every coordinate is zero at precision and v is
// only a lower bound; NonzeroBound means the element is provably nonzero but
// an unresolved coordinate could still lower the valuation below the resolved
// minimum, so v is again only a lower bound.
struct CycloValuation {
  enum class Kind { ExactZero, Floor, Exact, NonzeroBound };

  Kind kind = Kind::ExactZero;
  Rat64 v{0, 1};

  bool is_exact() const { return kind == Kind::Exact; }
};

// Element of Q_p(zeta_p) stored as coefficients of 1, zeta, ..., zeta^{p-2}.
// Every coordinate carries its own precision state; multiplication converts
// both factors to a fixed-point representation (common valuation offset plus
// residues modulo a power of p), convolves exactly, and converts back.  The
// resulting per-coordinate absolute precision equals the minimum the
// coordinate-by-coordinate product formula would certify, at a fraction of
// the cost.
class CycloElement {
 public:
  CycloElement(long p, std::vector<PadicScalar> coords);

  static CycloElement zero(long p);
  static CycloElement one(long p, long trusted);
  static CycloElement from_scalar(const PadicScalar& c0);
  // zeta^k as an exact element (k arbitrary, reduced mod p), with the stated
  // number of trusted digits on its coordinates.
  static CycloElement zeta_power(long p, long k, long trusted);

  long prime() const { return prime_; }
  long dim() const { return prime_ - 1; }
  const PadicScalar& coord(long i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<PadicScalar>& coords() const { return coords_; }

  bool is_exact_zero() const;
  // True when no coordinate resolved to a nonzero value.
  bool is_zero_at_precision() const;

  CycloElement neg() const;
  CycloElement mul_zeta_pow(long k) const;
  // zeta -> zeta^c for c not divisible by p.
  CycloElement galois_apply(long c) const;

  CycloValuation valuation() const;

  std::string str() const;
  static CycloElement parse(const std::string& text, long p);

  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);

 private:
  long prime_;
  std::vector<PadicScalar> coords_;
};

CycloElement operator*(const PadicScalar& c, const CycloElement& x);
CycloElement pow_ui(const CycloElement& x, unsigned long e);

// Solves x * y = 1 by Gaussian elimination on the multiplication matrix,
// pivoting on the resolved entry of smallest valuation.  Throws
// SingularSystemError when a pivot column has no resolved entry.
CycloElement inverse(const CycloElement& x);

// Valuation as required to be exact: throws PrecisionExhaustedError when the
// element did not resolve (all coordinates zero at precision, or an
// unresolved coordinate shadows the minimum).
Rat64 cyclo_valuation(const CycloElement& x);

// Floor evidence for the whole element, derived from valuation().
FloorInfo cyclo_floor(const CycloElement& x);

// Splits off the zeta^0 coordinate; `nonconstant` is floor evidence for the
// remaining coordinates, so callers can certify (or refute) membership in
// Q_p at the working precision.
struct RationalProjection {
  PadicScalar value;
  FloorInfo nonconstant;
};

RationalProjection rational_projection(const CycloElement& x);

// Fixed-point view: coords[i] in [0, p^digits) with the element equal to
// p^offset * sum coords[i] zeta^i up to an error of absolute valuation
// >= offset + digits in every coordinate.  digits == 0 encodes an element
// with no resolved coordinate (a pure floor).
struct CycloFixedPoint {
  long prime = 0;
  long offset = 0;
  long digits = 0;
  std::vector<BigInt> coords;
};

CycloFixedPoint to_fixed_point(const CycloElement& x);
CycloElement from_fixed_point(const CycloFixedPoint& f);

// Exact negacyclic-free convolution: bins[(i+j) mod p] += a[i]*b[j], then
// zeta^{p-1} elimination, reducing every output mod p^digits.
std::vector<BigInt> convolve_mod(const std::vector<BigInt>& a,
                                 const std::vector<BigInt>& b, long p,
                                 long digits);

}  // namespace pv
