#include "padicverify/series.hpp"

#include <algorithm>

#include "padicverify/errors.hpp"

namespace pv {

namespace {

long floor_log_base(long p, long k) {
  long e = 0;
  long pw = 1;
  while (pw <= k / p) {
    pw *= p;
    ++e;
  }
  return e;
}

}  // namespace

long exp_series_terms(long p, long v, long abs_target) {
  if (v < 1) throw DomainError("exp_series_terms: argument valuation < 1");
  // v(x^k / k!) >= k*v - (k-1)/(p-1), increasing in k; find the first index
  // whose bound clears the target, everything at or after it is tail.
  long k = 1;
  while (k * v * (p - 1) - (k - 1) < abs_target * (p - 1)) ++k;
  return k - 1;
}

long log_series_terms(long p, long v, long abs_target) {
  if (v < 1) throw DomainError("log_series_terms: argument valuation < 1");
  // v(t^k / k) >= k*v - floor(log_p k), nondecreasing in k for v >= 1.
  long k = 1;
  while (k * v - floor_log_base(p, k) < abs_target) ++k;
  return k - 1;
}

PadicScalar exp_scalar(const PadicScalar& x) {
  const long p = x.prime();
  if (p == 2) throw DomainError("exp_scalar: p must be odd");
  if (x.is_exact_zero()) return PadicScalar::one(p, 1);
  if (x.is_zero_at_precision()) {
    if (x.floor() < 1) {
      throw DomainError("exp_scalar: argument floor below convergence domain");
    }
    return PadicScalar::one(p, x.floor());
  }
  const long v = x.valuation();
  if (v < 1) throw DomainError("exp_scalar: argument valuation must be >= 1");
  const long abs = v + x.trusted();
  const long terms = exp_series_terms(p, v, abs);

  PadicScalar acc = PadicScalar::one(p, abs);
  PadicScalar term = acc;
  for (long k = 1; k <= terms; ++k) {
    term = term * x / PadicScalar::from_integer(p, k, term.trusted());
    acc = acc + term;
  }
  return acc.with_abs_floor(abs);
}

PadicScalar log1p_scalar(const PadicScalar& t) {
  const long p = t.prime();
  if (t.is_exact_zero()) return t;
  if (t.is_zero_at_precision()) {
    if (t.floor() < 1) {
      throw DomainError("log1p_scalar: argument floor below convergence domain");
    }
    return t;
  }
  const long v = t.valuation();
  if (v < 1) throw DomainError("log1p_scalar: argument valuation must be >= 1");
  const long abs = v + t.trusted();
  const long terms = log_series_terms(p, v, abs);

  PadicScalar acc = PadicScalar::exact_zero(p);
  PadicScalar pw = PadicScalar::one(p, t.trusted());
  for (long k = 1; k <= terms; ++k) {
    pw = pw * t;
    PadicScalar term = pw / PadicScalar::from_integer(p, k, pw.trusted());
    acc = (k % 2 == 1) ? acc + term : acc - term;
  }
  return acc.with_abs_floor(abs);
}

PadicScalar iwasawa_log_scalar(const PadicScalar& x) {
  const long p = x.prime();
  if (x.is_zero()) {
    throw DomainError("iwasawa_log_scalar: argument must resolve nonzero");
  }
  PadicScalar y = shift(x, -x.valuation());
  PadicScalar z = pow_ui(y, static_cast<unsigned long>(p - 1));
  PadicScalar body = log1p_scalar(z - PadicScalar::one(p, z.trusted()));
  return body / PadicScalar::from_integer(p, p - 1, z.trusted());
}

Jet jet_exp(const Jet& a) {
  if (a.value.is_exact_zero()) {
    // exp(0 + d*eps) = 1 + d*eps exactly; give the unit enough width that it
    // never clamps the derivative.
    long width = 1;
    if (a.deriv.state() == PadicScalar::State::Value) {
      width = std::max<long>(1, a.deriv.valuation() + a.deriv.trusted());
    } else if (a.deriv.is_zero_at_precision()) {
      width = std::max<long>(1, a.deriv.floor());
    }
    return Jet{PadicScalar::one(a.value.prime(), width), a.deriv};
  }
  PadicScalar e = exp_scalar(a.value);
  return Jet{e, e * a.deriv};
}

Jet jet_log(const Jet& a) {
  return Jet{iwasawa_log_scalar(a.value), a.deriv / a.value};
}

}  // namespace pv
