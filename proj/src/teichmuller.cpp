#include "padicverify/teichmuller.hpp"

#include "padicverify/errors.hpp"

namespace pv {

namespace {

BigInt lift_root(long p, long t, long digits) {
  const BigInt& m = p_pow(p, digits);
  BigInt x(t);
  // Each step doubles the agreement with the fixed point at worst linearly;
  // digits+2 iterations are always enough, the loop usually exits earlier.
  for (long i = 0; i <= digits + 2; ++i) {
    BigInt next = pow_mod(x, BigInt(p), m);
    if (next == x) return x;
    x = next;
  }
  throw PrecisionExhaustedError("teichmuller: fixed point not reached");
}

}  // namespace

TeichmullerTable::TeichmullerTable(long p, long digits)
    : prime_(p), digits_(digits) {
  if (p < 3) throw DomainError("TeichmullerTable: prime must be >= 3");
  if (digits < 1) throw DomainError("TeichmullerTable: digits must be >= 1");
  roots_.reserve(static_cast<size_t>(p - 1));
  for (long t = 1; t <= p - 1; ++t) roots_.push_back(lift_root(p, t, digits));
}

const BigInt& TeichmullerTable::root(long t) const {
  long r = t % prime_;
  if (r < 0) r += prime_;
  if (r == 0) throw DomainError("teichmuller: argument divisible by p");
  return roots_[static_cast<size_t>(r - 1)];
}

PadicScalar TeichmullerTable::omega(long t) const {
  return PadicScalar::from_unit(prime_, 0, root(t), digits_);
}

PadicScalar TeichmullerTable::omega_pow(long t, long e) const {
  const BigInt& m = p_pow(prime_, digits_);
  // omega(t) has order dividing p-1.
  long r = e % (prime_ - 1);
  if (r < 0) r += prime_ - 1;
  if (r == 0) return PadicScalar::one(prime_, digits_);
  return PadicScalar::from_unit(prime_, 0, pow_mod(root(t), BigInt(r), m),
                                digits_);
}

PadicScalar teichmuller(long p, long t, long digits) {
  long r = t % p;
  if (r < 0) r += p;
  if (r == 0) throw DomainError("teichmuller: argument divisible by p");
  return PadicScalar::from_unit(p, 0, lift_root(p, r, digits), digits);
}

PadicScalar principal_unit(const PadicScalar& x, const TeichmullerTable& table) {
  if (x.is_zero()) {
    throw DomainError("principal_unit: argument must resolve nonzero");
  }
  if (x.prime() != table.prime()) {
    throw PrimeMismatchError("principal_unit: table prime mismatch");
  }
  PadicScalar u = shift(x, -x.valuation());
  long r = static_cast<long>(mpz_fdiv_ui(u.unit_digits().get_mpz_t(),
                                         static_cast<unsigned long>(x.prime())));
  return u / table.omega(r);
}

}  // namespace pv
