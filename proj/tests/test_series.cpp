#include <random>

#include "doctest.h"
#include "padicverify/floors.hpp"
#include "padicverify/series.hpp"
#include "padicverify/teichmuller.hpp"

using namespace pv;

namespace {

PadicScalar random_unit(std::mt19937_64& rng, long p, long trusted) {
  std::uniform_int_distribution<long> digit(0, p - 1);
  BigInt u = 1 + digit(rng) % (p - 1);
  for (long i = 1; i < trusted; ++i) u += digit(rng) * p_pow(p, i);
  return PadicScalar::from_unit(p, 0, u, trusted);
}

PadicScalar random_principal(std::mt19937_64& rng, long p, long trusted) {
  return PadicScalar::one(p, trusted) + shift(random_unit(rng, p, trusted), 1);
}

}  // namespace

TEST_CASE("series term counts are positive and monotone") {
  CHECK(exp_series_terms(5, 1, 20) > 0);
  CHECK(exp_series_terms(5, 1, 40) >= exp_series_terms(5, 1, 20));
  CHECK(log_series_terms(5, 1, 40) >= log_series_terms(5, 1, 20));
  CHECK(exp_series_terms(5, 3, 20) <= exp_series_terms(5, 1, 20));
}

TEST_CASE("exp of zero is one and the domain is enforced") {
  PadicScalar e = exp_scalar(PadicScalar::exact_zero(5));
  CHECK(e.valuation() == 0);
  CHECK(e.unit_digits() == 1);
  CHECK_THROWS_AS(exp_scalar(PadicScalar::one(5, 10)), DomainError);
  CHECK_THROWS_AS(log1p_scalar(PadicScalar::one(5, 10)), DomainError);
}

TEST_CASE("log1p matches its truncated alternating series") {
  PadicScalar x = log1p_scalar(PadicScalar::from_integer(5, 5, 30));
  BigRat partial = BigRat(5) - BigRat(25, 2) + BigRat(125, 3);
  CHECK(x.residue(4) == PadicScalar::from_rational(5, partial, 10).residue(4));
}

TEST_CASE("exp and log invert each other on the convergence domain") {
  std::mt19937_64 rng(21);
  for (long p : {5L, 7L, 11L, 13L}) {
    for (int i = 0; i < 25; ++i) {
      PadicScalar u = random_principal(rng, p, 40);
      PadicScalar t = u - PadicScalar::one(p, 40);
      PadicScalar round = exp_scalar(log1p_scalar(t));
      CHECK(floor_of(round - u).is_zero_evidence());

      PadicScalar x = shift(random_unit(rng, p, 40), 1);
      PadicScalar back = log1p_scalar(exp_scalar(x) - PadicScalar::one(p, 40));
      CHECK(floor_of(back - x).is_zero_evidence());
    }
  }
}

TEST_CASE("log turns products into sums") {
  std::mt19937_64 rng(22);
  for (long p : {5L, 7L, 11L, 13L}) {
    for (int i = 0; i < 50; ++i) {
      PadicScalar a = random_principal(rng, p, 40);
      PadicScalar b = random_principal(rng, p, 40);
      PadicScalar lhs = log1p_scalar(a * b - PadicScalar::one(p, 40));
      PadicScalar rhs = log1p_scalar(a - PadicScalar::one(p, 40)) +
                        log1p_scalar(b - PadicScalar::one(p, 40));
      CHECK(floor_of(lhs - rhs).is_zero_evidence());
    }
  }
}

TEST_CASE("branch-fixed scalar log ignores p powers and Teichmuller parts") {
  std::mt19937_64 rng(23);
  for (long p : {5L, 7L}) {
    TeichmullerTable table(p, 40);
    for (int i = 0; i < 20; ++i) {
      PadicScalar u = random_principal(rng, p, 40);
      CHECK(floor_of(iwasawa_log_scalar(shift(u, 3)) - iwasawa_log_scalar(u))
                .is_zero_evidence());
      std::uniform_int_distribution<long> t(1, p - 1);
      PadicScalar tw = table.omega(t(rng));
      CHECK(floor_of(iwasawa_log_scalar(tw * u) - iwasawa_log_scalar(u))
                .is_zero_evidence());
    }
    CHECK(iwasawa_log_scalar(PadicScalar::from_integer(p, p, 40)).is_zero());
  }
}

TEST_CASE("scalar log respects powers") {
  std::mt19937_64 rng(24);
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 10; ++i) {
      PadicScalar u = random_unit(rng, p, 40);
      PadicScalar lhs = iwasawa_log_scalar(pow_ui(u, static_cast<unsigned long>(p - 1)));
      PadicScalar rhs = (p - 1) * iwasawa_log_scalar(u);
      CHECK(floor_of(lhs - rhs).is_zero_evidence());
    }
  }
}

TEST_CASE("jet arithmetic matches hand differentiation of a rational map") {
  // f(s) = (3 + s)(1 + 2s)/(1 - s); f(h) and f'(h) from the quotient rule.
  for (long p : {5L, 7L}) {
    for (long k = 1; k <= 3; ++k) {
      PadicScalar h = shift(PadicScalar::one(p, 30), k);
      Jet s = Jet::variable(h, 30);
      Jet one = Jet::constant(PadicScalar::one(p, 30));
      Jet three = Jet::constant(PadicScalar::from_integer(p, 3, 30));
      Jet two_s = s + s;
      Jet f = (three + s) * (one + two_s) / (one - s);

      BigRat hv(1);
      for (long i = 0; i < k; ++i) hv *= p;
      BigRat num = (3 + hv) * (1 + 2 * hv);
      BigRat den = 1 - hv;
      BigRat deriv =
          ((1 + 2 * hv + 2 * (3 + hv)) * den + num) / (den * den);
      CHECK(floor_of(f.value - PadicScalar::from_rational(p, num / den, 30))
                .is_zero_evidence());
      CHECK(floor_of(f.deriv - PadicScalar::from_rational(p, deriv, 30))
                .is_zero_evidence());
    }
  }
}

TEST_CASE("reciprocal jet at the origin") {
  Jet s = Jet::variable(PadicScalar::exact_zero(5), 20);
  Jet one = Jet::constant(PadicScalar::one(5, 20));
  Jet r = one / (s - one);
  CHECK(floor_of(r.value + PadicScalar::one(5, 20)).is_zero_evidence());
  CHECK(floor_of(r.deriv + PadicScalar::one(5, 20)).is_zero_evidence());
}

TEST_CASE("jet exp and log are mutually inverse and obey the chain rule") {
  std::mt19937_64 rng(25);
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 15; ++i) {
      PadicScalar point = shift(random_unit(rng, p, 30), 1);
      Jet s = Jet::variable(point, 30);
      Jet round = jet_log(jet_exp(s));
      CHECK(floor_of(round.value - s.value).is_zero_evidence());
      CHECK(floor_of(round.deriv - s.deriv).is_zero_evidence());

      // d/ds exp(2s) = 2 exp(2s).
      Jet e2 = jet_exp(s + s);
      CHECK(floor_of(e2.deriv - 2 * e2.value).is_zero_evidence());
    }
  }
}

TEST_CASE("jet exp at an exact zero point keeps the derivative budget") {
  Jet s = Jet::variable(PadicScalar::exact_zero(5), 25);
  Jet e = jet_exp(s);
  CHECK(e.value.unit_digits() == 1);
  CHECK(e.value.trusted() >= 25);
  CHECK(floor_of(e.deriv - PadicScalar::one(5, 25)).is_zero_evidence());
}

TEST_CASE("series results are stable under a larger digit budget") {
  std::mt19937_64 rng(26);
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 10; ++i) {
      std::uniform_int_distribution<long> nd(1, 100000);
      long n = nd(rng);
      auto build = [&](long trusted) {
        PadicScalar t = shift(PadicScalar::from_integer(p, n, trusted), 1);
        return exp_scalar(t) * log1p_scalar(t);
      };
      CHECK(floor_of(build(30) - build(50)).is_zero_evidence());
    }
  }
}
