#include "padicverify/engine.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "padicverify/errors.hpp"
#include "padicverify/gamma.hpp"

namespace pv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

FloorInfo pairwise_min_floor(const std::vector<PadicScalar>& xs) {
  // Vacuous over fewer than two entries.
  FloorInfo acc;
  bool first = true;
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      FloorInfo f = floor_of(xs[i] - xs[j]);
      acc = first ? f : combine_min(acc, f);
      first = false;
    }
  }
  return acc;
}

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PadicScalar phi_sum(const DirichletCharacter& chi, const LogTable& table,
                    const TeichmullerTable& roots) {
  const long p = table.prime;
  PadicScalar acc = PadicScalar::exact_zero(p);
  for (long a = 1; a < p; ++a) {
    acc = acc + chi_value(chi, a, roots) * table.v_at(a);
  }
  return acc;
}

std::vector<DiscrepancyRecord> discrepancy_scan(const LogTable& table) {
  const long p = table.prime;
  const long digits = table.digits;
  const PadicScalar& v1 = table.v_at(1);
  const CycloElement& l1 = table.L_at(1);
  const PadicScalar one_minus_p = PadicScalar::from_integer(p, 1 - p, digits);
  const PadicScalar two_minus_p = PadicScalar::from_integer(p, 2 - p, digits);
  const PadicScalar p_minus_one = PadicScalar::from_integer(p, p - 1, digits);

  std::vector<DiscrepancyRecord> out;
  out.reserve(static_cast<size_t>(p - 1));
  for (long a = 1; a < p; ++a) {
    const PadicScalar& va = table.v_at(a);
    const CycloElement& la = table.L_at(a);
    PadicScalar av1 = a * v1;

    CycloElement residual = CycloElement::from_scalar(va - av1) -
                            one_minus_p * (la - l1);
    CycloElement delta = CycloElement::from_scalar(av1) + two_minus_p * la +
                         p_minus_one * l1;
    // v(a) - w(a) = v(a) + L_a; (delta + residual) equals it by algebra.
    CycloElement vw = CycloElement::from_scalar(va) - table.w_at(a);
    CycloElement consistency = (delta + residual) - vw;

    RationalProjection split = rational_projection(residual);
    out.push_back(DiscrepancyRecord{a, residual, delta, cyclo_floor(residual),
                                    floor_of(split.value), split.nonconstant,
                                    cyclo_floor(consistency)});
  }
  return out;
}

SolveResult solve_constants(const CharacterSummary& s1,
                            const CharacterSummary& s2) {
  PadicScalar det = s1.lp_deriv * s2.l0 - s2.lp_deriv * s1.l0;
  if (det.is_zero()) {
    throw SingularSystemError(
        "solve_constants: determinant carries no resolved digits");
  }
  PadicScalar u1 = (s1.phi * s2.l0 - s2.phi * s1.l0) / det;
  PadicScalar u2 = (s1.lp_deriv * s2.phi - s2.lp_deriv * s1.phi) / det;
  return SolveResult{u1, u2,
                     {s1.chi.exponent, s2.chi.exponent},
                     det.valuation()};
}

SolveResult solve_constants_auto(
    const std::vector<CharacterSummary>& summaries) {
  std::optional<SolveResult> best;
  for (size_t i = 0; i < summaries.size(); ++i) {
    for (size_t j = i + 1; j < summaries.size(); ++j) {
      try {
        SolveResult r = solve_constants(summaries[i], summaries[j]);
        if (!best || r.det_valuation < best->det_valuation) best = r;
      } catch (const SingularSystemError&) {
        continue;
      }
    }
  }
  if (!best) {
    throw SingularSystemError(
        "solve_constants_auto: every character pair is singular at precision");
  }
  return *best;
}

CpRecovery recover_cp(const DirichletCharacter& chi, const LogTable& table,
                      const TeichmullerTable& roots,
                      const PadicScalar& lp_deriv) {
  const long p = table.prime;
  if (lp_deriv.is_zero()) {
    throw DomainError("recover_cp: derivative did not resolve nonzero");
  }
  CycloElement num = CycloElement::zero(p);
  for (long a = 1; a < p; ++a) {
    num = num + chi_value(chi, a, roots) * table.L_at(a);
  }
  RationalProjection split = rational_projection(num);
  return CpRecovery{split.value.neg() / lp_deriv, split.nonconstant};
}

RenormResult renorm_check(const std::vector<CharacterSummary>& summaries,
                          const PadicScalar& u1, const PadicScalar& u2) {
  RenormResult out;
  std::vector<PadicScalar> ratios;
  FloorInfo resid;
  bool first = true;
  for (const CharacterSummary& s : summaries) {
    if (s.lp_deriv.is_zero()) {
      throw DomainError("renorm_check: derivative did not resolve nonzero");
    }
    PadicScalar ratio = (s.phi - u2 * s.l0) / s.lp_deriv;
    ratios.push_back(ratio);
    out.ratios.emplace_back(s.chi.exponent, ratio);
    FloorInfo f = floor_of(ratio - u1);
    resid = first ? f : combine_min(resid, f);
    first = false;
  }
  out.constancy = pairwise_min_floor(ratios);
  out.u1_residual = resid;
  return out;
}

VerificationReport run_protocol(const ProtocolConfig& config) {
  const long p = config.p;
  if (p == 2) throw DomainError("run_protocol: p = 2 is out of scope");
  if (!is_odd_prime(p)) throw DomainError("run_protocol: p must be an odd prime");
  if (p < 5) {
    throw DomainError(
        "run_protocol: solving for both constants needs two odd characters, "
        "so p >= 5");
  }

  const long target = config.target_digits;
  const long guard =
      std::max(config.guard, PrecisionPolicy::min_guard(p, target));
  PrecisionPolicy policy = PrecisionPolicy::make(p, target, guard);
  const long working = policy.working();
  const long gamma_digits =
      config.gamma_digits > 0 ? config.gamma_digits : default_gamma_digits(p);

  std::vector<std::pair<std::string, double>> timings;
  Clock::time_point t0 = Clock::now();
  auto mark = [&](const char* name) {
    if (config.with_timings) timings.emplace_back(name, seconds_since(t0));
    t0 = Clock::now();
  };

  TeichmullerTable roots(p, working);

  // Convention: explicit name, or pick the first one whose multiplicative
  // Gross-Koblitz check validates at a = 1.
  GaussConvention conv = GaussConvention::Standard;
  bool convention_found = true;
  std::vector<GrossKoblitzResidual> gk;
  if (config.convention != "auto") {
    conv = parse_convention(config.convention);
  }
  if (!config.skip_gamma_check) {
    DworkUniformizer dwork = dwork_pi(p, working);
    if (config.convention == "auto") {
      convention_found = false;
      for (GaussConvention c : all_conventions()) {
        GrossKoblitzResidual probe = gross_koblitz_check(
            1, roots, dwork, gamma_digits, kDefaultGammaCostBound, c);
        if (probe.multiplicative_pass) {
          conv = c;
          convention_found = true;
          break;
        }
      }
    }
    for (long a = 1; a < p; ++a) {
      gk.push_back(gross_koblitz_check(a, roots, dwork, gamma_digits,
                                       kDefaultGammaCostBound, conv));
    }
  }
  mark("branch_and_convention");

  LogTable table = build_log_table(roots, conv);
  mark("log_table");

  std::vector<DiscrepancyRecord> discrepancy = discrepancy_scan(table);
  mark("discrepancy");

  BernoulliCache bern(kl_truncation_index(p, working));
  std::vector<DirichletCharacter> odd = enumerate_odd_nontrivial(p);
  std::vector<CharacterSummary> summaries;
  std::vector<FloorInfo> interpolation;
  summaries.reserve(odd.size());
  for (const DirichletCharacter& chi : odd) {
    PadicScalar phi = phi_sum(chi, table, roots);
    PadicScalar l0 = L_at_zero(chi, roots);
    Jet lp = kubota_leopoldt(chi, roots, bern);
    interpolation.push_back(floor_of(lp.value - l0));
    summaries.push_back(CharacterSummary{chi, phi, l0, lp.deriv,
                                         PadicScalar::exact_zero(p),
                                         PadicScalar::exact_zero(p),
                                         FloorInfo{}});
  }
  mark("characters");

  SolveResult solved = solve_constants_auto(summaries);
  ConstantsRecord constants{solved.u1,
                            solved.u2,
                            solved.source_exponents,
                            solved.det_valuation,
                            {},
                            FloorInfo{},
                            {},
                            FloorInfo{},
                            FloorInfo{}};
  for (CharacterSummary& s : summaries) {
    PadicScalar fit = s.phi - constants.u1 * s.lp_deriv - constants.u2 * s.l0;
    constants.per_chi_fit.emplace_back(s.chi.exponent, floor_of(fit));
    s.phi_ren = s.phi - constants.u2 * s.l0;
  }
  constants.u2_prediction =
      floor_of(constants.u2 + shift(table.v_at(1), 1));

  std::vector<PadicScalar> cps;
  const PadicScalar one_minus_p =
      PadicScalar::from_integer(p, 1 - p, working);
  FloorInfo u1_pred;
  bool first_pred = true;
  for (CharacterSummary& s : summaries) {
    CpRecovery rec = recover_cp(s.chi, table, roots, s.lp_deriv);
    s.cp = rec.cp;
    s.cp_nonrational = rec.nonrational;
    constants.cp_per_chi.emplace_back(s.chi.exponent, rec.cp);
    cps.push_back(rec.cp);
    FloorInfo f = floor_of(constants.u1 + one_minus_p * rec.cp);
    u1_pred = first_pred ? f : combine_min(u1_pred, f);
    first_pred = false;
  }
  constants.cp_independence = pairwise_min_floor(cps);
  constants.u1_prediction = u1_pred;
  mark("constants");

  RenormResult renorm = renorm_check(summaries, constants.u1, constants.u2);
  mark("renorm");

  // Infrastructure invariants: theorems independent of the paper's claims.
  std::vector<InfraCheck> infra;
  auto add_check = [&](const std::string& name, bool pass,
                       const std::string& detail) {
    infra.push_back(InfraCheck{name, pass, detail});
  };

  add_check("r1-residual-vanishes",
            discrepancy.front().residual_floor.is_zero_evidence(),
            discrepancy.front().residual_floor.str());

  {
    FloorInfo acc = discrepancy.front().form_consistency;
    bool pass = acc.is_zero_evidence();
    for (const DiscrepancyRecord& d : discrepancy) {
      acc = combine_min(acc, d.form_consistency);
      pass = pass && d.form_consistency.is_zero_evidence();
    }
    add_check("delta-form-consistency", pass, acc.str());
  }

  {
    FloorInfo f = floor_of(table.v_at(p - 1));
    add_check("v-last-vanishes", f.is_zero_evidence(), f.str());
  }

  {
    FloorInfo acc;
    bool pass = true;
    bool first = true;
    for (long a = 1; a <= (p - 1) / 2; ++a) {
      FloorInfo f = floor_of(table.v_at(a) + table.v_at(p - 1 - a));
      acc = first ? f : combine_min(acc, f);
      first = false;
      pass = pass && f.is_zero_evidence();
    }
    add_check("v-pairing", pass, acc.str());
  }

  {
    FloorInfo acc = table.v_nonconstant.front();
    bool pass = true;
    for (const FloorInfo& f : table.v_nonconstant) {
      acc = combine_min(acc, f);
      pass = pass && f.is_zero_evidence();
    }
    add_check("v-rationality", pass, acc.str());
  }

  if (!config.skip_gamma_check) {
    add_check("gauss-convention", convention_found, convention_name(conv));
    bool mult_pass = true;
    bool log_pass = true;
    FloorInfo mult_acc;
    FloorInfo log_acc;
    bool first_mult = true;
    bool first_log = true;
    for (const GrossKoblitzResidual& g : gk) {
      if (g.has_multiplicative) {
        mult_pass = mult_pass && g.multiplicative_pass;
        mult_acc = first_mult ? g.multiplicative
                              : combine_min(mult_acc, g.multiplicative);
        first_mult = false;
      }
      log_pass = log_pass && g.log_pass;
      log_acc = first_log ? g.log_level : combine_min(log_acc, g.log_level);
      first_log = false;
    }
    add_check("gk-multiplicative", mult_pass, mult_acc.str());
    add_check("gk-log-level", log_pass, log_acc.str());
  }

  {
    FloorInfo acc = interpolation.front();
    bool pass = true;
    for (const FloorInfo& f : interpolation) {
      acc = combine_min(acc, f);
      pass = pass && f.is_zero_evidence();
    }
    add_check("interpolation-at-zero", pass, acc.str());
  }

  {
    // Recompute phi through the paired indices: phi = -sum chi(p-1-a) v(a).
    FloorInfo acc;
    bool pass = true;
    bool first = true;
    for (const CharacterSummary& s : summaries) {
      PadicScalar alt = PadicScalar::exact_zero(p);
      for (long a = 1; a < p; ++a) {
        alt = alt + chi_value(s.chi, p - 1 - a, roots) * table.v_at(a);
      }
      FloorInfo f = floor_of(s.phi + alt);
      acc = first ? f : combine_min(acc, f);
      first = false;
      pass = pass && f.is_zero_evidence();
    }
    add_check("phi-pairing", pass, acc.str());
  }

  bool infra_pass = true;
  for (const InfraCheck& c : infra) infra_pass = infra_pass && c.pass;

  // Strict gate: measured paper-claim floors against target - guard.
  const Rat64 threshold = Rat64::integer(target - guard);
  bool strict_pass = true;
  for (const DiscrepancyRecord& d : discrepancy) {
    if (d.index == 1) continue;
    strict_pass = strict_pass && d.residual_floor.at_least(threshold);
  }
  for (const auto& [exponent, fit] : constants.per_chi_fit) {
    if (exponent == constants.source_exponents.first ||
        exponent == constants.source_exponents.second) {
      continue;
    }
    strict_pass = strict_pass && fit.at_least(threshold);
  }
  strict_pass = strict_pass && constants.u2_prediction.at_least(threshold);
  strict_pass = strict_pass && constants.cp_independence.at_least(threshold);
  strict_pass = strict_pass && constants.u1_prediction.at_least(threshold);
  strict_pass = strict_pass && renorm.constancy.at_least(threshold);

  int exit_code = 0;
  if (!infra_pass) {
    exit_code = 2;
  } else if (config.strict && !strict_pass) {
    exit_code = 3;
  }

  return VerificationReport{config,
                            working,
                            guard,
                            gamma_digits,
                            convention_name(conv),
                            std::move(table),
                            std::move(gk),
                            std::move(discrepancy),
                            std::move(summaries),
                            std::move(constants),
                            std::move(renorm),
                            std::move(infra),
                            infra_pass,
                            strict_pass,
                            exit_code,
                            std::move(timings)};
}

}  // namespace pv
