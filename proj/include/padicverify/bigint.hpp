#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace pv {

using BigInt = mpz_class;
using BigRat = mpq_class;

// p^k, with a per-thread cache (k >= 0).
const BigInt& p_pow(long p, long k);

// Largest e with p^e | n, for n != 0.
long int_valuation(const BigInt& n, long p);

// Valuation of a nonzero rational: val(num) - val(den).
long rat_valuation(const BigRat& q, long p);

// a^(-1) mod m; throws DivisionByZeroError if not invertible.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// base^exp mod m, exp >= 0.
BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m);

// binomial(n, k) as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

// Reduced valuation-style fraction (den > 0, gcd(num, den) = 1).
struct Rat64 {
  long num = 0;
  long den = 1;

  static Rat64 make(long num, long den);
  static Rat64 integer(long n) { return Rat64{n, 1}; }

  Rat64 operator+(const Rat64& o) const;
  Rat64 operator-(const Rat64& o) const;
  bool operator==(const Rat64& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat64& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rat64& o) const { return num * o.den <= o.num * den; }

  std::string str() const;
};

}  // namespace pv
