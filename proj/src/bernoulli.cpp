#include "padicverify/bernoulli.hpp"

#include "padicverify/errors.hpp"

namespace pv {

BernoulliCache::BernoulliCache(long max_index) {
  if (max_index < 0) throw DomainError("BernoulliCache: negative index");
  values_.reserve(static_cast<size_t>(max_index) + 1);
  values_.emplace_back(1);
  for (long n = 1; n <= max_index; ++n) {
    // sum_{i=0}^{n} C(n+1, i) B_i = 0
    BigRat acc(0);
    for (long i = 0; i < n; ++i) {
      acc += BigRat(binomial(static_cast<unsigned long>(n + 1),
                             static_cast<unsigned long>(i))) *
             values_[static_cast<size_t>(i)];
    }
    BigRat bn = -acc / BigRat(n + 1);
    bn.canonicalize();
    values_.push_back(bn);
  }
}

const BigRat& BernoulliCache::get(long n) const {
  if (n < 0 || n > max_index()) {
    throw DomainError("BernoulliCache: index out of range");
  }
  return values_[static_cast<size_t>(n)];
}

BigRat bernoulli_poly(const BernoulliCache& cache, long n, const BigRat& x) {
  BigRat acc(0);
  BigRat xp(1);
  // Accumulate from the x^n term down: C(n,k) B_k x^{n-k}.
  for (long k = n; k >= 0; --k) {
    acc += BigRat(binomial(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(k))) *
           cache.get(k) * xp;
    // next power of x belongs to k-1 (exponent n-k+1)
    if (k > 0) xp *= x;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace pv
