#include "padicverify/gamma.hpp"

#include <algorithm>

#include "padicverify/errors.hpp"

namespace pv {

PadicScalar morita_gamma_nat(long p, const BigInt& n, long working) {
  if (n < 0) throw DomainError("morita_gamma_nat: negative argument");
  const BigInt& m = p_pow(p, working);
  BigInt acc(1);
  BigInt j(1);
  int lazy = 0;
  while (j < n) {
    if (j % p != 0) {
      acc *= j;
      if (++lazy == 32) {
        acc %= m;
        lazy = 0;
      }
    }
    ++j;
  }
  acc %= m;
  if (mpz_odd_p(n.get_mpz_t())) acc = m - acc;
  return PadicScalar::from_unit(p, 0, acc, working);
}

PadicScalar morita_gamma(long p, const BigRat& x, long digitsM, long working,
                         long cost_bound) {
  if (digitsM < 1) throw DomainError("morita_gamma: digitsM must be >= 1");
  const BigInt& pm = p_pow(p, digitsM);
  if (pm > cost_bound) {
    throw CostBoundError("morita_gamma: p^M = " + pm.get_str() +
                         " exceeds cost bound " + std::to_string(cost_bound));
  }
  const BigInt& den = x.get_den();
  if (den % p == 0) {
    throw DomainError("morita_gamma: argument not in Z_p");
  }
  BigInt num = x.get_num() % pm;
  if (num < 0) num += pm;
  BigInt r = (num * mod_inverse(den % pm, pm)) % pm;
  PadicScalar g = morita_gamma_nat(p, r, working);
  return g.truncated(std::min(digitsM, working));
}

long default_gamma_digits(long p, long bound) {
  long m = 1;
  BigInt pw(p);
  while (pw * p <= bound) {
    pw *= p;
    ++m;
  }
  return m;
}

}  // namespace pv
