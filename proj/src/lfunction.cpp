#include "padicverify/lfunction.hpp"

#include "padicverify/errors.hpp"
#include "padicverify/floors.hpp"
#include "padicverify/series.hpp"

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

void require_odd_nontrivial(const DirichletCharacter& chi) {
  if (chi.is_trivial() || !chi.is_odd()) {
    throw DomainError("kubota_leopoldt: character must be odd and nontrivial");
  }
}

// The series is evaluated either on plain scalars or on first-order jets;
// lift<S> embeds a tracked constant into the carrier.
template <typename S>
S lift(const PadicScalar& c);

template <>
PadicScalar lift<PadicScalar>(const PadicScalar& c) {
  return c;
}

template <>
Jet lift<Jet>(const PadicScalar& c) {
  return Jet::constant(c);
}

PadicScalar carrier_exp(const PadicScalar& x) { return exp_scalar(x); }
Jet carrier_exp(const Jet& x) { return jet_exp(x); }

// L_p(s, chi*omega) as a finite sum over residues a with the binomial series
// in (p/a) truncated at kl_truncation_index.  Dropped terms carry valuation
// at least j - 2 - 2*floor(log_p j) in both carrier components, so summing
// up to the truncation index reaches the working precision.
template <typename S>
S kl_series(const DirichletCharacter& chi, const S& s,
            const TeichmullerTable& table, const BernoulliCache& bern) {
  const long p = chi.prime;
  const long digits = table.digits();
  const long trunc = kl_truncation_index(p, digits);
  if (bern.max_index() < trunc) {
    throw DomainError(
        "kubota_leopoldt: Bernoulli cache shorter than the truncation index");
  }

  const PadicScalar one_w = PadicScalar::one(p, digits);

  // binom(1-s, j) by the ratio recurrence; for j >= 2 the value component is
  // an exact zero and only the derivative survives.
  std::vector<S> bin;
  bin.reserve(static_cast<size_t>(trunc) + 1);
  bin.push_back(lift<S>(one_w));
  for (long j = 1; j <= trunc; ++j) {
    S factor = lift<S>(PadicScalar::from_integer(p, 2 - j, digits)) - s;
    bin.push_back(bin.back() * factor /
                  lift<S>(PadicScalar::from_integer(p, j, digits)));
  }

  S total = lift<S>(PadicScalar::exact_zero(p));
  for (long a = 1; a < p; ++a) {
    PadicScalar theta = table.omega_pow(a, chi.exponent + 1);
    PadicScalar pu =
        principal_unit(PadicScalar::from_integer(p, a, digits), table);
    PadicScalar lg = log1p_scalar(pu - one_w);
    // <a>^{1-s} = <a> * exp(-s log<a>)
    S power = lift<S>(pu) * carrier_exp((s * lift<S>(lg)).neg());

    S inner = lift<S>(PadicScalar::exact_zero(p));
    BigRat ratio(p, a);
    ratio.canonicalize();
    BigRat ratio_pow(1);
    for (long j = 0; j <= trunc; ++j) {
      if (j > 0) ratio_pow *= ratio;
      BigRat coeff = bern.get(j) * ratio_pow;
      if (coeff == 0) continue;
      inner = inner + bin[static_cast<size_t>(j)] *
                          lift<S>(PadicScalar::from_rational(p, coeff, digits));
    }
    total = total + lift<S>(theta) * power * inner;
  }

  S pref = lift<S>(one_w) / (s - lift<S>(one_w));
  return pref * total / lift<S>(PadicScalar::from_integer(p, p, digits));
}

}  // namespace

std::vector<DirichletCharacter> enumerate_odd_nontrivial(long p) {
  if (p < 3) {
    throw DomainError("enumerate_odd_nontrivial: need an odd prime");
  }
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<size_t>((p - 1) / 2));
  for (long k = 1; k <= p - 2; k += 2) {
    out.push_back(DirichletCharacter{p, k});
  }
  return out;
}

PadicScalar chi_value(const DirichletCharacter& chi, long a,
                      const TeichmullerTable& table) {
  if (chi.prime != table.prime()) {
    throw PrimeMismatchError("chi_value: character and table prime differ");
  }
  long r = a % chi.prime;
  if (r == 0) return PadicScalar::exact_zero(chi.prime);
  return table.omega_pow(a, chi.exponent);
}

PadicScalar L_at_zero(const DirichletCharacter& chi,
                      const TeichmullerTable& table) {
  if (chi.prime != table.prime()) {
    throw PrimeMismatchError("L_at_zero: character and table prime differ");
  }
  if (chi.is_trivial()) {
    throw DomainError("L_at_zero: character must be nontrivial");
  }
  const long p = chi.prime;
  PadicScalar sum = PadicScalar::exact_zero(p);
  for (long a = 1; a < p; ++a) {
    sum = sum + a * table.omega_pow(a, chi.exponent);
  }
  return shift(sum, -1).neg();
}

long kl_truncation_index(long p, long working) {
  long last = 2;
  const long horizon = working + 96;
  for (long j = 1; j <= horizon; ++j) {
    if (j - 2 - 2 * floor_log_base(p, j) < working) last = j;
  }
  return last;
}

Jet kubota_leopoldt(const DirichletCharacter& chi,
                    const TeichmullerTable& table,
                    const BernoulliCache& bern) {
  require_odd_nontrivial(chi);
  if (chi.prime != table.prime()) {
    throw PrimeMismatchError("kubota_leopoldt: character and table prime differ");
  }
  Jet s = Jet::variable(PadicScalar::exact_zero(chi.prime), table.digits());
  Jet out = kl_series<Jet>(chi, s, table, bern);

  PadicScalar check = out.value - L_at_zero(chi, table);
  if (!floor_of(check).is_zero_evidence()) {
    throw Error(
        "kubota_leopoldt: series value at s = 0 disagrees with the finite "
        "character sum");
  }
  return out;
}

PadicScalar kubota_leopoldt_at(const DirichletCharacter& chi,
                               const PadicScalar& s,
                               const TeichmullerTable& table,
                               const BernoulliCache& bern) {
  require_odd_nontrivial(chi);
  if (chi.prime != table.prime() || s.prime() != chi.prime) {
    throw PrimeMismatchError("kubota_leopoldt_at: prime mismatch");
  }
  if (s.state() == PadicScalar::State::Value && s.valuation() < 1) {
    throw DomainError("kubota_leopoldt_at: s must lie in p Z_p");
  }
  if (s.is_zero_at_precision() && s.floor() < 1) {
    throw DomainError("kubota_leopoldt_at: s must lie in p Z_p");
  }
  return kl_series<PadicScalar>(chi, s, table, bern);
}

PadicScalar lp_derivative_at_zero(const DirichletCharacter& chi,
                                  const TeichmullerTable& table,
                                  const BernoulliCache& bern) {
  return kubota_leopoldt(chi, table, bern).deriv;
}

}  // namespace pv
