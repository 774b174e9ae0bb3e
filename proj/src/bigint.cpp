#include "padicverify/bigint.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>

#include "padicverify/errors.hpp"

namespace pv {

const BigInt& p_pow(long p, long k) {
  // Deque keeps references to cached powers valid while new ones are
  // appended; callers hold them across further p_pow calls.
  thread_local std::unordered_map<long, std::deque<BigInt>> cache;
  auto& powers = cache[p];
  if (powers.empty()) powers.emplace_back(1);
  while (static_cast<long>(powers.size()) <= k) {
    powers.push_back(powers.back() * p);
  }
  return powers[static_cast<size_t>(k)];
}

long int_valuation(const BigInt& n, long p) {
  if (n == 0) throw DomainError("int_valuation: argument is zero");
  BigInt rem;
  BigInt pz(p);
  return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

long rat_valuation(const BigRat& q, long p) {
  if (q == 0) throw DomainError("rat_valuation: argument is zero");
  return int_valuation(q.get_num(), p) - int_valuation(q.get_den(), p);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DivisionByZeroError("mod_inverse: argument not invertible");
  }
  return r;
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat64 Rat64::make(long num, long den) {
  if (den == 0) throw DomainError("Rat64: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat64{num, den};
}

Rat64 Rat64::operator+(const Rat64& o) const {
  return make(num * o.den + o.num * den, den * o.den);
}

Rat64 Rat64::operator-(const Rat64& o) const {
  return make(num * o.den - o.num * den, den * o.den);
}

std::string Rat64::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace pv
