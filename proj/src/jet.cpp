#include "padicverify/jet.hpp"

namespace pv {

Jet operator+(const Jet& a, const Jet& b) {
  return Jet{a.value + b.value, a.deriv + b.deriv};
}

Jet operator-(const Jet& a, const Jet& b) {
  return Jet{a.value - b.value, a.deriv - b.deriv};
}

Jet operator*(const Jet& a, const Jet& b) {
  return Jet{a.value * b.value, a.deriv * b.value + a.value * b.deriv};
}

Jet operator/(const Jet& a, const Jet& b) {
  PadicScalar q = a.value / b.value;
  return Jet{q, (a.deriv - q * b.deriv) / b.value};
}

Jet operator*(const PadicScalar& c, const Jet& a) {
  return Jet{c * a.value, c * a.deriv};
}

}  // namespace pv
