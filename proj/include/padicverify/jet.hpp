#pragma once

#include "padicverify/padic.hpp"

namespace pv {

// First-order jet (value, derivative) at a point, used to differentiate the
// p-adic L-function in the s variable without symbolic work.  Arithmetic is
// the usual dual-number rule; each component keeps its own precision state.
struct Jet {
  PadicScalar value;
  PadicScalar deriv;

  static Jet constant(const PadicScalar& v) {
    return Jet{v, PadicScalar::exact_zero(v.prime())};
  }

  // The coordinate function s at the point v: derivative exactly 1, carried
  // with the same digit budget as the value when resolved.
  static Jet variable(const PadicScalar& v, long trusted) {
    return Jet{v, PadicScalar::one(v.prime(), trusted)};
  }

  Jet neg() const { return Jet{value.neg(), deriv.neg()}; }
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator*(const PadicScalar& c, const Jet& a);

}  // namespace pv
