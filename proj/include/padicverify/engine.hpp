#pragma once

#include <string>
#include <utility>
#include <vector>

#include "padicverify/cyclo.hpp"
#include "padicverify/floors.hpp"
#include "padicverify/gauss.hpp"
#include "padicverify/lfunction.hpp"
#include "padicverify/precision.hpp"

namespace pv {

inline constexpr unsigned long kDefaultSeed = 0x5ca1ab1eUL;

struct ProtocolConfig {
  long p = 0;
  long target_digits = 100;
  long guard = 0;         // 0: policy minimum for (p, target)
  long gamma_digits = 0;  // 0: largest M with p^M <= 20000
  bool strict = false;
  bool skip_gamma_check = false;
  std::string convention = "auto";
  long threads = 1;
  unsigned long seed = kDefaultSeed;
  bool with_timings = false;
};

// Residual of the discrepancy identity at index a, together with the
// alternative delta form and the consistency of the two, all measured in the
// cyclotomic ring.  No verdict is attached to `residual`: its floors are the
// data.
struct DiscrepancyRecord {
  long index;
  CycloElement residual;  // v(a) - a v(1) - (1-p)(L_a - L_1)
  CycloElement delta;     // a v(1) + (2-p) L_a + (p-1) L_1
  FloorInfo residual_floor;
  FloorInfo rational_floor;     // zeta^0 coordinate of residual
  FloorInfo nonrational_floor;  // remaining coordinates of residual
  // (delta + residual) - (v(a) + L_a): zero by algebra, so any resolved mass
  // here is a bug in assembling one of the two forms.
  FloorInfo form_consistency;
};

struct CharacterSummary {
  DirichletCharacter chi;
  PadicScalar phi;       // sum_a chi(a) v(a)
  PadicScalar l0;        // L(0, chi), exact finite sum route
  PadicScalar lp_deriv;  // d/ds L_p(s, chi omega) at s = 0
  PadicScalar phi_ren;   // phi - U2 l0, filled once U2 is solved
  PadicScalar cp;        // recovered C_p from this character
  FloorInfo cp_nonrational;
};

struct SolveResult {
  PadicScalar u1;
  PadicScalar u2;
  std::pair<long, long> source_exponents;
  long det_valuation;
};

struct ConstantsRecord {
  PadicScalar u1;
  PadicScalar u2;
  std::pair<long, long> source_exponents;
  long det_valuation;
  // exponent -> floor of phi - u1 lp_deriv - u2 l0
  std::vector<std::pair<long, FloorInfo>> per_chi_fit;
  FloorInfo u2_prediction;  // u2 + p v(1)
  std::vector<std::pair<long, PadicScalar>> cp_per_chi;
  FloorInfo cp_independence;  // min pairwise difference floor
  FloorInfo u1_prediction;    // min over chi of u1 + (1-p) cp(chi)
};

struct RenormResult {
  std::vector<std::pair<long, PadicScalar>> ratios;  // (phi - u2 l0)/lp_deriv
  FloorInfo constancy;    // min pairwise ratio difference floor
  FloorInfo u1_residual;  // min over chi of ratio - u1
};

struct InfraCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  ProtocolConfig config;
  long working_digits;
  long guard_digits;
  long gamma_digits;
  std::string convention;  // the validating Gauss-sum convention
  LogTable table;
  std::vector<GrossKoblitzResidual> gk;
  std::vector<DiscrepancyRecord> discrepancy;
  std::vector<CharacterSummary> characters;
  ConstantsRecord constants;
  RenormResult renorm;
  std::vector<InfraCheck> infra_checks;
  bool infra_pass;
  bool strict_pass;  // every measured paper-claim floor >= target - guard
  int exit_code;     // 0 ok, 2 infra failure, 3 strict floors short
  std::vector<std::pair<std::string, double>> timings;
};

// sum_a chi(a) v(a) over a = 1..p-1.
PadicScalar phi_sum(const DirichletCharacter& chi, const LogTable& table,
                    const TeichmullerTable& roots);

std::vector<DiscrepancyRecord> discrepancy_scan(const LogTable& table);

// Cramer solve of phi = u1 lp_deriv + u2 l0 from two summaries.  Throws
// SingularSystemError when the determinant carries no resolved digits.
SolveResult solve_constants(const CharacterSummary& s1,
                            const CharacterSummary& s2);

// Tries every pair, keeps the one with minimal determinant valuation
// (first in exponent-lexicographic order on ties).
SolveResult solve_constants_auto(const std::vector<CharacterSummary>& summaries);

struct CpRecovery {
  PadicScalar cp;
  FloorInfo nonrational;
};

// C_p(chi) = -(sum_a chi(a) L_a | zeta^0) / lp_deriv; the non-rational
// coordinate floor of the numerator is reported alongside.
CpRecovery recover_cp(const DirichletCharacter& chi, const LogTable& table,
                      const TeichmullerTable& roots,
                      const PadicScalar& lp_deriv);

RenormResult renorm_check(const std::vector<CharacterSummary>& summaries,
                          const PadicScalar& u1, const PadicScalar& u2);

VerificationReport run_protocol(const ProtocolConfig& config);

bool is_odd_prime(long p);

}  // namespace pv
