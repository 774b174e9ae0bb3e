#include "padicverify/cyclolog.hpp"

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

// Last series index whose worst-case term valuation falls short of
// abs_target, given a guaranteed argument valuation v = num/den > 0.
// Indices past the returned value all clear the target.
long last_shallow_index(long p, const Rat64& v, long abs_target) {
  if (v.num <= 0) {
    throw PrecisionExhaustedError(
        "iwasawa_log: argument valuation bound not positive");
  }
  const long horizon = v.den * (abs_target + 48) / v.num + 8;
  long last = 0;
  for (long k = 1; k <= horizon; ++k) {
    // term bound: k*v - floor(log_p k) < abs_target ?
    if (k * v.num < v.den * (abs_target + floor_log_base(p, k))) last = k;
  }
  return last;
}

}  // namespace

CycloElement shift_element(const CycloElement& x, long k) {
  std::vector<PadicScalar> out;
  out.reserve(x.coords().size());
  for (const auto& c : x.coords()) out.push_back(shift(c, k));
  return CycloElement(x.prime(), std::move(out));
}

CycloElement iwasawa_log(const CycloElement& x) {
  const long p = x.prime();
  const long n = p - 1;

  Rat64 xv = cyclo_valuation(x);  // throws unless the valuation resolved
  const long m = xv.num * n / xv.den;

  CycloElement y = shift_element(pow_ui(x, static_cast<unsigned long>(n)), -m);
  CycloElement z = pow_ui(y, static_cast<unsigned long>(n));

  long one_digits = 1;
  for (const auto& c : z.coords()) {
    if (c.state() == PadicScalar::State::Value) {
      one_digits = std::max(one_digits, c.trusted());
    }
  }
  CycloElement t = z - CycloElement::one(p, one_digits);

  // log(1 + t) = t + O(t^2); when t carries no resolved digits the result
  // inherits its floors unchanged (the (p-1)^2 denominator is a unit).
  if (t.is_exact_zero() || t.is_zero_at_precision()) return t;

  CycloFixedPoint fp = to_fixed_point(t);
  if (fp.digits == 0) return t;
  if (fp.offset < 0) {
    throw PrecisionExhaustedError("iwasawa_log: principal part not integral");
  }
  const long abs = fp.offset + fp.digits;

  CycloValuation tv = t.valuation();
  Rat64 bound = tv.v;  // Exact or NonzeroBound both give a sound lower bound

  const long terms = last_shallow_index(p, bound, abs);
  if (terms == 0) {
    return CycloElement(
        p, std::vector<PadicScalar>(static_cast<size_t>(n),
                                    PadicScalar::zero_at(p, abs)));
  }
  const long dshift = floor_log_base(p, terms);
  const BigInt& mod = p_pow(p, abs);

  // Plain integral coordinates of t modulo p^abs.
  std::vector<BigInt> base(static_cast<size_t>(n), BigInt(0));
  for (size_t i = 0; i < fp.coords.size(); ++i) {
    base[i] = (fp.coords[i] * p_pow(p, fp.offset)) % mod;
  }

  // G accumulates p^dshift * sum_k (-1)^{k+1} t^k / k modulo p^abs.
  std::vector<BigInt> g(static_cast<size_t>(n), BigInt(0));
  std::vector<BigInt> power = base;
  for (long k = 1; k <= terms; ++k) {
    if (k > 1) power = convolve_mod(power, base, p, abs);
    long e = 0;
    long ku = k;
    while (ku % p == 0) {
      ku /= p;
      ++e;
    }
    BigInt coef = (p_pow(p, dshift - e) * mod_inverse(BigInt(ku), mod)) % mod;
    for (size_t i = 0; i < g.size(); ++i) {
      if (power[i] == 0) continue;
      if (k % 2 == 1) {
        g[i] = (g[i] + power[i] * coef) % mod;
      } else {
        g[i] = (g[i] - power[i] * coef) % mod;
        if (g[i] < 0) g[i] += mod;
      }
    }
  }

  // log x = (G / p^dshift) / (p-1)^2, known to absolute precision abs - dshift.
  BigInt unit_inv = mod_inverse(BigInt(n) * n, mod);
  CycloFixedPoint out;
  out.prime = p;
  out.offset = -dshift;
  out.digits = abs;
  out.coords.resize(static_cast<size_t>(n));
  for (size_t i = 0; i < g.size(); ++i) {
    out.coords[i] = (g[i] * unit_inv) % mod;
  }
  return from_fixed_point(out);
}

CycloElement cyclo_unit_log(long p, long a, long digits) {
  if (a % p == 0) {
    throw DomainError("cyclo_unit_log: exponent divisible by p");
  }
  CycloElement arg =
      CycloElement::one(p, digits) - CycloElement::zeta_power(p, a, digits);
  return iwasawa_log(arg);
}

}  // namespace pv
