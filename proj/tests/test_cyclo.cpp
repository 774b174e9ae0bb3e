#include <random>
#include <vector>

#include "doctest.h"
#include "padicverify/cyclo.hpp"
#include "padicverify/cyclolog.hpp"

using namespace pv;

namespace {

// Independent oracle over Z[zeta]: elements as integer coefficient vectors of
// length p-1, products taken in Z[x]/(x^p - 1) and folded through
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
std::vector<BigInt> oracle_mul(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b, long p) {
  std::vector<BigInt> full(static_cast<size_t>(p), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      full[(i + j) % static_cast<size_t>(p)] += a[i] * b[j];
    }
  }
  std::vector<BigInt> out(static_cast<size_t>(p - 1));
  for (size_t i = 0; i + 1 < full.size(); ++i) out[i] = full[i] - full.back();
  return out;
}

CycloElement lift(const std::vector<BigInt>& coeffs, long p, long trusted) {
  std::vector<PadicScalar> coords;
  coords.reserve(coeffs.size());
  for (const BigInt& c : coeffs) {
    coords.push_back(PadicScalar::from_integer(p, c, trusted));
  }
  return CycloElement(p, std::move(coords));
}

// Coordinate congruence against exact integers over a digit window.
void check_congruent(const CycloElement& x, const std::vector<BigInt>& ref,
                     long window) {
  const long p = x.prime();
  const BigInt& m = p_pow(p, window);
  for (long i = 0; i < p - 1; ++i) {
    BigInt want;
    mpz_mod(want.get_mpz_t(), ref[static_cast<size_t>(i)].get_mpz_t(),
            m.get_mpz_t());
    CHECK(x.coord(i).residue(window) == want);
  }
}

std::vector<BigInt> random_coeffs(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> c(-100, 100);
  std::vector<BigInt> out(static_cast<size_t>(p - 1));
  for (auto& v : out) v = c(rng);
  return out;
}

bool all_zero_evidence(const CycloElement& x) {
  for (long i = 0; i < x.prime() - 1; ++i) {
    if (x.coord(i).state() == PadicScalar::State::Value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ring product matches the integer polynomial oracle") {
  std::mt19937_64 rng(11);
  for (long p : {5L, 7L, 11L, 13L}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<BigInt> a = random_coeffs(rng, p);
      std::vector<BigInt> b = random_coeffs(rng, p);
      CycloElement prod = lift(a, p, 30) * lift(b, p, 30);
      check_congruent(prod, oracle_mul(a, b, p), 20);
    }
  }
}

TEST_CASE("zeta shift and galois action match the oracle") {
  std::mt19937_64 rng(12);
  for (long p : {5L, 7L}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BigInt> a = random_coeffs(rng, p);
      CycloElement x = lift(a, p, 30);
      for (long k = 1; k < p; ++k) {
        std::vector<BigInt> zk(static_cast<size_t>(p - 1), BigInt(0));
        if (k <= p - 2) {
          zk[static_cast<size_t>(k)] = 1;
        } else {
          for (auto& v : zk) v = -1;
        }
        check_congruent(x.mul_zeta_pow(k), oracle_mul(a, zk, p), 20);

        std::vector<BigInt> sigma(static_cast<size_t>(p), BigInt(0));
        for (long i = 0; i <= p - 2; ++i) {
          sigma[static_cast<size_t>((k * i) % p)] += a[static_cast<size_t>(i)];
        }
        std::vector<BigInt> folded(static_cast<size_t>(p - 1));
        for (size_t i = 0; i + 1 < sigma.size(); ++i) {
          folded[i] = sigma[i] - sigma.back();
        }
        check_congruent(x.galois_apply(k), folded, 20);
      }
    }
  }
}

TEST_CASE("sum of all p-th roots of unity cancels to the working floor") {
  for (long p : {5L, 7L, 11L, 13L}) {
    CycloElement s = CycloElement::zero(p);
    for (long i = 0; i < p; ++i) s = s + CycloElement::zeta_power(p, i, 20);
    for (long j = 0; j + 1 < p; ++j) {
      const PadicScalar& c = s.coord(j);
      CHECK(c.is_zero_at_precision());
      CHECK(c.abs_precision().value() >= 20);
    }
  }
}

TEST_CASE("product of 1 - zeta^a over all a equals p") {
  for (long p : {5L, 7L, 11L}) {
    CycloElement prod = CycloElement::one(p, 30);
    for (long a = 1; a < p; ++a) {
      prod = prod * (CycloElement::one(p, 30) - CycloElement::zeta_power(p, a, 30));
    }
    RationalProjection split = rational_projection(prod);
    CHECK(split.nonconstant.is_zero_evidence());
    CHECK(floor_of(split.value - PadicScalar::from_integer(p, p, 30))
              .is_zero_evidence());
  }
}

TEST_CASE("inverse of zeta is the negated sum of lower powers") {
  for (long p : {5L, 7L}) {
    CycloElement zi = inverse(CycloElement::zeta_power(p, 1, 30));
    CycloElement expect = CycloElement::zeta_power(p, p - 1, 30);
    CHECK(all_zero_evidence(zi - expect));
  }
}

TEST_CASE("inverse solves x * y = 1 on random elements") {
  std::mt19937_64 rng(13);
  for (long p : {5L, 7L, 11L}) {
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<BigInt> a = random_coeffs(rng, p);
      a[0] += 1000;  // keep the element clearly invertible
      CycloElement x = lift(a, p, 30);
      CycloElement residual = x * inverse(x) - CycloElement::one(p, 30);
      CHECK(all_zero_evidence(residual));
    }
  }
}

TEST_CASE("valuation of 1 - zeta is 1/(p-1)") {
  for (long p : {5L, 7L, 11L, 13L}) {
    CycloElement x =
        CycloElement::one(p, 30) - CycloElement::zeta_power(p, 1, 30);
    CHECK(cyclo_valuation(x) == Rat64::make(1, p - 1));
  }
}

TEST_CASE("valuation classifies zero and scalar elements") {
  CycloElement z = CycloElement::zero(5);
  CHECK(z.valuation().kind == CycloValuation::Kind::ExactZero);
  CHECK_THROWS_AS(cyclo_valuation(z), DomainError);

  CycloElement c = CycloElement::from_scalar(PadicScalar::from_integer(5, 50, 8));
  CHECK(cyclo_valuation(c) == Rat64::integer(2));

  CycloElement f = CycloElement::from_scalar(PadicScalar::zero_at(5, 9));
  CHECK(f.valuation().kind == CycloValuation::Kind::Floor);
  CHECK_THROWS_AS(cyclo_valuation(f), PrecisionExhaustedError);
}

TEST_CASE("valuation is additive on resolved products") {
  std::mt19937_64 rng(14);
  long resolved = 0;
  for (long p : {5L, 7L, 11L}) {
    for (int trial = 0; trial < 25; ++trial) {
      CycloElement x = lift(random_coeffs(rng, p), p, 30);
      CycloElement y = lift(random_coeffs(rng, p), p, 30);
      try {
        Rat64 vx = cyclo_valuation(x);
        Rat64 vy = cyclo_valuation(y);
        CHECK(cyclo_valuation(x * y) == vx + vy);
        ++resolved;
      } catch (const Error&) {
        continue;
      }
    }
  }
  CHECK(resolved > 50);
}

TEST_CASE("fixed point view round trips") {
  std::mt19937_64 rng(15);
  for (long p : {5L, 7L}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloElement x = lift(random_coeffs(rng, p), p, 25);
      CycloFixedPoint f = to_fixed_point(x);
      CycloElement back = from_fixed_point(f);
      CHECK(all_zero_evidence(back - x));
    }
  }
}

TEST_CASE("element text round trips") {
  CycloElement x =
      CycloElement::zeta_power(5, 2, 7) - CycloElement::one(5, 7);
  CycloElement back = CycloElement::parse(x.str(), 5);
  CHECK(back.str() == x.str());
  CHECK_THROWS_AS(CycloElement::parse("nope", 5), ParseError);
}

TEST_CASE("branch-fixed log kills p and roots of unity") {
  for (long p : {5L, 7L}) {
    CycloElement lp =
        iwasawa_log(CycloElement::from_scalar(PadicScalar::from_integer(p, p, 40)));
    CHECK(all_zero_evidence(lp));
    for (long k = 1; k < p; ++k) {
      CHECK(all_zero_evidence(iwasawa_log(CycloElement::zeta_power(p, k, 40))));
    }
  }
}

TEST_CASE("branch-fixed log is a homomorphism in the ring") {
  std::mt19937_64 rng(16);
  for (long p : {5L, 7L}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<BigInt> a = random_coeffs(rng, p);
      std::vector<BigInt> b = random_coeffs(rng, p);
      a[0] += 500;
      b[0] += 500;
      CycloElement x = lift(a, p, 40);
      CycloElement y = lift(b, p, 40);
      CycloElement d = iwasawa_log(x * y) - (iwasawa_log(x) + iwasawa_log(y));
      CHECK(all_zero_evidence(d));
    }
  }
}

TEST_CASE("unit log helper agrees with the generic log") {
  for (long p : {5L, 7L}) {
    for (long a = 1; a < p; ++a) {
      CycloElement direct = cyclo_unit_log(p, a, 40);
      CycloElement generic = iwasawa_log(
          CycloElement::one(p, 40) - CycloElement::zeta_power(p, a, 40));
      CHECK(all_zero_evidence(direct - generic));
    }
  }
}

TEST_CASE("shift_element scales every coordinate exactly") {
  CycloElement x = CycloElement::zeta_power(5, 1, 10);
  CycloElement s = shift_element(x, 3);
  CHECK(s.coord(1).valuation() == 3);
  CHECK(s.coord(1).trusted() == 10);
}
