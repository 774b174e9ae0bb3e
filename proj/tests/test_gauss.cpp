#include "doctest.h"
#include "padicverify/gamma.hpp"
#include "padicverify/gauss.hpp"

using namespace pv;

namespace {

bool all_zero_evidence(const CycloElement& x) {
  for (long i = 0; i < x.prime() - 1; ++i) {
    if (x.coord(i).state() == PadicScalar::State::Value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trivial character sum is -1") {
  for (long p : {5L, 7L, 11L}) {
    TeichmullerTable table(p, 30);
    CycloElement tau = gauss_sum(p - 1, table);
    CycloElement minus_one =
        CycloElement::from_scalar(PadicScalar::from_integer(p, -1L, 30));
    CHECK(all_zero_evidence(tau - minus_one));
  }
}

TEST_CASE("valuations climb in steps of 1/(p-1)") {
  for (long p : {5L, 7L, 11L, 13L}) {
    TeichmullerTable table(p, 30);
    for (long a = 1; a <= p - 2; ++a) {
      CHECK(cyclo_valuation(gauss_sum(a, table)) == Rat64::make(a, p - 1));
    }
  }
}

TEST_CASE("conjugate pairs multiply to a signed p") {
  for (long p : {5L, 7L, 11L}) {
    TeichmullerTable table(p, 30);
    for (long a = 1; a <= p - 2; ++a) {
      CycloElement prod = gauss_sum(a, table) * gauss_sum(p - 1 - a, table);
      long sign = (a % 2 == 0) ? 1 : -1;
      CycloElement expect = CycloElement::from_scalar(
          PadicScalar::from_integer(p, sign * p, 30));
      CHECK(all_zero_evidence(prod - expect));
    }
  }
}

TEST_CASE("quadratic character sum squares to a signed p") {
  for (long p : {5L, 7L, 11L, 13L}) {
    TeichmullerTable table(p, 30);
    CycloElement tau = gauss_sum((p - 1) / 2, table);
    long sign = (p % 4 == 1) ? 1 : -1;
    CycloElement expect = CycloElement::from_scalar(
        PadicScalar::from_integer(p, sign * p, 30));
    CHECK(all_zero_evidence(tau * tau - expect));
  }
}

TEST_CASE("galois twists the sum by a character value") {
  for (long p : {5L, 7L}) {
    TeichmullerTable table(p, 30);
    for (long a = 1; a <= p - 2; ++a) {
      for (long c = 2; c <= 3; ++c) {
        CycloElement lhs = gauss_sum(a, table).galois_apply(c);
        CycloElement rhs = table.omega_pow(c, a) * gauss_sum(a, table);
        CHECK(all_zero_evidence(lhs - rhs));
      }
    }
  }
}

TEST_CASE("log of the sum projects to a rational scalar") {
  for (long p : {5L, 7L}) {
    TeichmullerTable table(p, 40);
    for (long a = 1; a < p; ++a) {
      PadicScalar va = v_of(a, table);
      CHECK((va.is_zero() || va.valuation() >= 1));
    }
  }
}

TEST_CASE("log values pair to zero") {
  for (long p : {5L, 7L, 11L}) {
    TeichmullerTable table(p, 40);
    for (long a = 1; a <= p - 2; ++a) {
      CHECK(floor_of(v_of(a, table) + v_of(p - 1 - a, table)).is_zero_evidence());
    }
    CHECK(v_of(p - 1, table).is_zero());
    CHECK(v_of((p - 1) / 2, table).is_zero());
  }
}

TEST_CASE("uniformizer solves x^(p-1) = -p near zeta - 1") {
  for (long p : {5L, 7L, 11L}) {
    DworkUniformizer dwork = dwork_pi(p, 40);
    CycloElement pw = pow_ui(dwork.piP, static_cast<unsigned long>(p - 1));
    CycloElement minus_p = CycloElement::from_scalar(
        PadicScalar::from_integer(p, -p, 40));
    CHECK(all_zero_evidence(pw - minus_p));

    CycloElement anchor =
        dwork.piP -
        (CycloElement::zeta_power(p, 1, 40) - CycloElement::one(p, 40));
    CycloValuation v = anchor.valuation();
    CHECK(Rat64::make(2, p - 1) <= v.v);
  }
}

TEST_CASE("log table carries the protocol quantities") {
  for (long p : {5L, 7L}) {
    TeichmullerTable table(p, 40);
    LogTable lt = build_log_table(table, GaussConvention::Standard);
    CHECK(lt.prime == p);
    CHECK(static_cast<long>(lt.v.size()) == p - 1);
    CHECK(static_cast<long>(lt.L.size()) == p - 1);
    for (long a = 1; a < p; ++a) {
      CHECK(all_zero_evidence(lt.w_at(a) + lt.L_at(a)));
      CHECK(lt.v_nonconstant[static_cast<size_t>(a - 1)].is_zero_evidence());
      CHECK(all_zero_evidence(
          lt.L_at(a) - cyclo_unit_log(p, a, lt.digits)));
    }
    CycloElement lsum = CycloElement::zero(p);
    for (long a = 1; a < p; ++a) lsum = lsum + lt.L_at(a);
    CHECK(all_zero_evidence(lsum));
    for (long a = 1; a < p; ++a) {
      CHECK(all_zero_evidence(lt.L_at(p - a) - lt.L_at(a)));
    }
  }
}

TEST_CASE("identity cross-check passes at published depths") {
  struct Depth {
    long p;
    long m;
  };
  for (Depth d : {Depth{5, 6}, Depth{7, 5}}) {
    TeichmullerTable table(d.p, 40);
    DworkUniformizer dwork = dwork_pi(d.p, 40);
    for (long a = 1; a < d.p; ++a) {
      GrossKoblitzResidual r =
          gross_koblitz_check(a, table, dwork, d.m, kDefaultGammaCostBound,
                              GaussConvention::Standard);
      CHECK(r.log_pass);
      if (a <= d.p - 2) {
        CHECK(r.has_multiplicative);
        CHECK(r.multiplicative_pass);
      }
    }
  }
}

TEST_CASE("convention names round trip") {
  for (GaussConvention c : all_conventions()) {
    CHECK(parse_convention(convention_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_convention("bogus"), ParseError);
}
