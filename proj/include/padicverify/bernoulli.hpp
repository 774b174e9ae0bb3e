#pragma once

#include <vector>

#include "padicverify/bigint.hpp"

namespace pv {

// Exact Bernoulli numbers B_0..B_max (B_1 = -1/2 convention), computed once
// by the defining recurrence and reused across L-function evaluations.
class BernoulliCache {
 public:
  explicit BernoulliCache(long max_index);

  long max_index() const { return static_cast<long>(values_.size()) - 1; }
  const BigRat& get(long n) const;

 private:
  std::vector<BigRat> values_;
};

// Bernoulli polynomial value B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
BigRat bernoulli_poly(const BernoulliCache& cache, long n, const BigRat& x);

}  // namespace pv
