#include "padicverify/gauss.hpp"

#include <algorithm>

#include "padicverify/errors.hpp"
#include "padicverify/gamma.hpp"
#include "padicverify/series.hpp"

namespace pv {

std::string convention_name(GaussConvention c) {
  switch (c) {
    case GaussConvention::Standard:
      return "standard";
    case GaussConvention::ConjugateExponent:
      return "conjugate_exponent";
    case GaussConvention::ZetaSquared:
      return "zeta_squared";
  }
  return "standard";
}

GaussConvention parse_convention(const std::string& name) {
  if (name == "standard") return GaussConvention::Standard;
  if (name == "conjugate_exponent") return GaussConvention::ConjugateExponent;
  if (name == "zeta_squared") return GaussConvention::ZetaSquared;
  throw ParseError("unknown Gauss-sum convention: '" + name + "'");
}

const std::vector<GaussConvention>& all_conventions() {
  static const std::vector<GaussConvention> list = {
      GaussConvention::Standard, GaussConvention::ConjugateExponent,
      GaussConvention::ZetaSquared};
  return list;
}

CycloElement gauss_sum(long a, const TeichmullerTable& table,
                       GaussConvention conv) {
  const long p = table.prime();
  if (a < 1 || a > p - 1) throw DomainError("gauss_sum: index out of range");

  const long expo = (conv == GaussConvention::ConjugateExponent) ? a : -a;
  const long mult = (conv == GaussConvention::ZetaSquared) ? 2 : 1;

  std::vector<PadicScalar> coords(static_cast<size_t>(p - 1),
                                  PadicScalar::exact_zero(p));
  PadicScalar wrap = PadicScalar::exact_zero(p);
  for (long t = 1; t <= p - 1; ++t) {
    PadicScalar term = table.omega_pow(t, expo);
    long e = (mult * t) % p;
    if (e <= p - 2) {
      coords[static_cast<size_t>(e)] = term;
    } else {
      wrap = term;
    }
  }
  if (!wrap.is_exact_zero()) {
    for (auto& c : coords) c = c - wrap;
  }
  return CycloElement(p, std::move(coords));
}

DworkUniformizer dwork_pi(long p, long digits) {
  const unsigned long n = static_cast<unsigned long>(p - 1);
  CycloElement x =
      CycloElement::zeta_power(p, 1, digits) - CycloElement::one(p, digits);
  CycloElement pscal =
      CycloElement::from_scalar(PadicScalar::from_integer(p, p, digits));

  const long max_iter = 64;
  bool have_best = false;
  Rat64 best{0, 1};
  for (long iter = 0; iter < max_iter; ++iter) {
    CycloElement residual = pow_ui(x, n) + pscal;
    FloorInfo f = cyclo_floor(residual);
    if (f.is_zero_evidence()) {
      if (f.status == FloorInfo::Status::ExactZero) return DworkUniformizer{x};
      if (f.at_least(Rat64::integer(digits))) return DworkUniformizer{x};
      // The floor stopped improving: the representation's precision ceiling
      // is reached, further steps cannot help.
      if (have_best && f.bound <= best) return DworkUniformizer{x};
      best = f.bound;
      have_best = true;
    }
    CycloElement deriv =
        PadicScalar::from_integer(p, p - 1, digits) * pow_ui(x, n - 1);
    x = x - residual * inverse(deriv);
  }
  throw PrecisionExhaustedError("dwork_pi: Newton iteration did not settle");
}

PadicScalar v_of(long a, const TeichmullerTable& table, GaussConvention conv) {
  CycloElement lg = iwasawa_log(gauss_sum(a, table, conv));
  RationalProjection proj = rational_projection(lg);
  if (proj.nonconstant.status == FloorInfo::Status::Nonzero) {
    throw RationalityError(
        "v_of: log of Gauss sum resolved non-constant coordinates (" +
        proj.nonconstant.str() + ")");
  }
  // A value-free projection still carries the floor of what was discarded.
  if (proj.nonconstant.status == FloorInfo::Status::ZeroAtPrecision &&
      proj.value.is_exact_zero()) {
    long fl = proj.nonconstant.bound.num / proj.nonconstant.bound.den;
    return PadicScalar::zero_at(table.prime(), fl);
  }
  return proj.value;
}

LogTable build_log_table(const TeichmullerTable& table, GaussConvention conv) {
  const long p = table.prime();
  LogTable out;
  out.prime = p;
  out.digits = table.digits();
  out.convention = conv;
  out.v.reserve(static_cast<size_t>(p - 1));
  out.L.reserve(static_cast<size_t>(p - 1));
  out.w.reserve(static_cast<size_t>(p - 1));
  out.v_nonconstant.reserve(static_cast<size_t>(p - 1));
  for (long a = 1; a <= p - 1; ++a) {
    CycloElement lg = iwasawa_log(gauss_sum(a, table, conv));
    RationalProjection proj = rational_projection(lg);
    if (proj.nonconstant.status == FloorInfo::Status::Nonzero) {
      throw RationalityError(
          "log table: v(" + std::to_string(a) +
          ") resolved non-constant coordinates (" + proj.nonconstant.str() +
          ")");
    }
    out.v.push_back(proj.value);
    out.v_nonconstant.push_back(proj.nonconstant);
    CycloElement la = cyclo_unit_log(p, a, table.digits());
    out.w.push_back(la.neg());
    out.L.push_back(std::move(la));
  }
  return out;
}

GrossKoblitzResidual gross_koblitz_check(long a, const TeichmullerTable& table,
                                         const DworkUniformizer& dwork,
                                         long gamma_digits, long cost_bound,
                                         GaussConvention conv) {
  const long p = table.prime();
  if (a < 1 || a > p - 1) {
    throw DomainError("gross_koblitz_check: index out of range");
  }
  GrossKoblitzResidual out;
  out.a = a;
  out.convention = conv;

  BigRat arg(a, p - 1);
  arg.canonicalize();
  PadicScalar gamma =
      morita_gamma(p, arg, gamma_digits, table.digits(), cost_bound);

  if (a <= p - 2) {
    CycloElement tau = gauss_sum(a, table, conv);
    CycloElement predicted =
        gamma * pow_ui(dwork.piP, static_cast<unsigned long>(a));
    out.multiplicative = cyclo_floor(tau + predicted);
    out.has_multiplicative = true;
    out.multiplicative_pass = out.multiplicative.is_zero_evidence() &&
                              out.multiplicative.at_least(
                                  Rat64::make(gamma_digits, p - 1));
  }

  PadicScalar va = v_of(a, table, conv);
  PadicScalar log_gamma = iwasawa_log_scalar(gamma);
  out.log_level = floor_of(va - log_gamma);
  out.log_pass = out.log_level.is_zero_evidence() &&
                 out.log_level.at_least(Rat64::integer(gamma_digits));
  return out;
}

}  // namespace pv
