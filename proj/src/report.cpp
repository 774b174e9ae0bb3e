#include "padicverify/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pv {

namespace {

using ordered_json = nlohmann::ordered_json;

// CSV fields are restricted to [0-9p^*: -]; '*' marks an exact zero, and a
// rational bound n/d is written n:d.
std::string csv_floor(const FloorInfo& f) {
  if (f.status == FloorInfo::Status::ExactZero) return "*";
  std::ostringstream os;
  os << f.bound.num;
  if (f.bound.den != 1) os << ":" << f.bound.den;
  return os.str();
}

// Published values are cut to min(trusted, target) digits; internal floors
// stay as measured.
std::string published(const PadicScalar& x, long target) {
  return x.truncated(target).str();
}

std::string published(const CycloElement& x, long target) {
  std::vector<PadicScalar> coords;
  coords.reserve(x.coords().size());
  for (const PadicScalar& c : x.coords()) coords.push_back(c.truncated(target));
  return CycloElement(x.prime(), std::move(coords)).str();
}

ordered_json gk_json(const GrossKoblitzResidual& g) {
  ordered_json j;
  j["a"] = g.a;
  j["convention"] = convention_name(g.convention);
  if (g.has_multiplicative) {
    j["multiplicative_floor"] = g.multiplicative.str();
    j["multiplicative_pass"] = g.multiplicative_pass;
  } else {
    j["multiplicative_floor"] = nullptr;
    j["multiplicative_pass"] = nullptr;
  }
  j["log_floor"] = g.log_level.str();
  j["log_pass"] = g.log_pass;
  return j;
}

}  // namespace

std::string render_report_json(const VerificationReport& r) {
  const long n = r.config.target_digits;
  ordered_json root;

  ordered_json config;
  config["p"] = r.config.p;
  config["target_digits"] = r.config.target_digits;
  config["guard_digits"] = r.guard_digits;
  config["working_digits"] = r.working_digits;
  config["gamma_digits"] = r.gamma_digits;
  config["strict"] = r.config.strict;
  config["skip_gamma_check"] = r.config.skip_gamma_check;
  config["convention_requested"] = r.config.convention;
  config["threads"] = r.config.threads;
  config["seed"] = r.config.seed;
  root["config"] = config;

  ordered_json conventions;
  conventions["gauss"] = r.convention;
  conventions["log_branch"] = "log p = 0";
  conventions["gamma"] = "Morita";
  conventions["lp_derivative"] = "d/ds L_p(s, chi*omega) at s = 0";
  ordered_json gk = ordered_json::array();
  for (const GrossKoblitzResidual& g : r.gk) gk.push_back(gk_json(g));
  conventions["gross_koblitz"] = gk;
  root["conventions"] = conventions;

  ordered_json table;
  table["prime"] = r.table.prime;
  table["digits"] = r.table.digits;
  table["convention"] = convention_name(r.table.convention);
  ordered_json v = ordered_json::array();
  ordered_json vnc = ordered_json::array();
  ordered_json L = ordered_json::array();
  ordered_json w = ordered_json::array();
  for (const PadicScalar& x : r.table.v) v.push_back(published(x, n));
  for (const FloorInfo& f : r.table.v_nonconstant) vnc.push_back(f.str());
  for (const CycloElement& x : r.table.L) L.push_back(published(x, n));
  for (const CycloElement& x : r.table.w) w.push_back(published(x, n));
  table["v"] = v;
  table["v_nonconstant"] = vnc;
  table["L"] = L;
  table["w"] = w;
  root["log_table"] = table;

  ordered_json discrepancy = ordered_json::array();
  for (const DiscrepancyRecord& d : r.discrepancy) {
    ordered_json j;
    j["a"] = d.index;
    j["residual"] = published(d.residual, n);
    j["delta"] = published(d.delta, n);
    j["residual_floor"] = d.residual_floor.str();
    j["rational_floor"] = d.rational_floor.str();
    j["nonrational_floor"] = d.nonrational_floor.str();
    j["form_consistency"] = d.form_consistency.str();
    discrepancy.push_back(j);
  }
  root["discrepancy"] = discrepancy;

  ordered_json characters = ordered_json::array();
  for (const CharacterSummary& s : r.characters) {
    ordered_json j;
    j["exponent"] = s.chi.exponent;
    j["phi"] = published(s.phi, n);
    j["L0"] = published(s.l0, n);
    j["Lp_deriv"] = published(s.lp_deriv, n);
    j["phi_ren"] = published(s.phi_ren, n);
    j["Cp"] = published(s.cp, n);
    j["Cp_nonrational_floor"] = s.cp_nonrational.str();
    characters.push_back(j);
  }
  root["characters"] = characters;

  ordered_json constants;
  constants["U1"] = published(r.constants.u1, n);
  constants["U2"] = published(r.constants.u2, n);
  constants["source_exponents"] = {r.constants.source_exponents.first,
                                   r.constants.source_exponents.second};
  constants["det_valuation"] = r.constants.det_valuation;
  ordered_json fits = ordered_json::array();
  for (const auto& [exponent, floor] : r.constants.per_chi_fit) {
    fits.push_back({{"exponent", exponent}, {"floor", floor.str()}});
  }
  constants["per_chi_fit"] = fits;
  constants["U2_prediction_floor"] = r.constants.u2_prediction.str();
  ordered_json cps = ordered_json::array();
  for (const auto& [exponent, value] : r.constants.cp_per_chi) {
    cps.push_back({{"exponent", exponent}, {"value", published(value, n)}});
  }
  constants["Cp_per_chi"] = cps;
  constants["Cp_independence_floor"] = r.constants.cp_independence.str();
  constants["U1_prediction_floor"] = r.constants.u1_prediction.str();
  root["constants"] = constants;

  ordered_json renorm;
  ordered_json ratios = ordered_json::array();
  for (const auto& [exponent, value] : r.renorm.ratios) {
    ratios.push_back({{"exponent", exponent}, {"ratio", published(value, n)}});
  }
  renorm["ratios"] = ratios;
  renorm["constancy_floor"] = r.renorm.constancy.str();
  renorm["u1_residual_floor"] = r.renorm.u1_residual.str();
  root["renorm"] = renorm;

  ordered_json infra = ordered_json::array();
  for (const InfraCheck& c : r.infra_checks) {
    infra.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  infra.push_back({{"name", "strict-gate"},
                   {"pass", r.strict_pass},
                   {"detail", "threshold " +
                                  std::to_string(r.config.target_digits -
                                                 r.guard_digits) +
                                  " digits"}});
  root["infra_checks"] = infra;

  ordered_json timings = ordered_json::object();
  for (const auto& [name, secs] : r.timings) timings[name] = secs;
  root["timings"] = timings;

  return root.dump(2) + "\n";
}

std::string csv_header() {
  return "p,precision,num_odd_chi,U1,U2,U2_check_floor,fit_floor,"
         "Cp_independence_floor";
}

std::string csv_row(const VerificationReport& r) {
  FloorInfo fit;
  bool first = true;
  for (const auto& [exponent, floor] : r.constants.per_chi_fit) {
    fit = first ? floor : combine_min(fit, floor);
    first = false;
  }
  std::ostringstream os;
  os << r.config.p << "," << r.config.target_digits << ","
     << r.characters.size() << "," << published(r.constants.u1, r.config.target_digits) << ","
     << published(r.constants.u2, r.config.target_digits) << "," << csv_floor(r.constants.u2_prediction)
     << "," << csv_floor(fit) << ","
     << csv_floor(r.constants.cp_independence);
  return os.str();
}

}  // namespace pv
