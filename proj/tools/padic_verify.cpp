#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padicverify/bernoulli.hpp"
#include "padicverify/engine.hpp"
#include "padicverify/errors.hpp"
#include "padicverify/gamma.hpp"
#include "padicverify/gauss.hpp"
#include "padicverify/lfunction.hpp"
#include "padicverify/report.hpp"

namespace {

long env_long(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return v;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw pv::ParseError("cannot open output file: " + path);
  f << text;
}

void check_prime(long p, bool skip_gamma_check) {
  if (p == 2) throw pv::DomainError("p = 2 is out of scope");
  if (!pv::is_odd_prime(p)) throw pv::DomainError("p must be an odd prime");
  if (p > 97 && !skip_gamma_check) {
    throw pv::DomainError(
        "p > 97 exceeds the gamma cross-check cost ceiling; rerun with "
        "--skip-gamma-check");
  }
}

std::string text_summary(const pv::VerificationReport& r) {
  std::ostringstream os;
  os << "p = " << r.config.p << ", N = " << r.config.target_digits
     << ", working digits = " << r.working_digits << ", convention = "
     << r.convention << "\n";
  os << "U1 = " << r.constants.u1.str() << "\n";
  os << "U2 = " << r.constants.u2.str() << "\n";
  os << "source pair = (" << r.constants.source_exponents.first << ", "
     << r.constants.source_exponents.second
     << "), det valuation = " << r.constants.det_valuation << "\n";
  os << "U2 + p v(1) floor: " << r.constants.u2_prediction.str() << "\n";
  os << "Cp independence floor: " << r.constants.cp_independence.str() << "\n";
  os << "U1 + (1-p) Cp floor: " << r.constants.u1_prediction.str() << "\n";
  os << "renorm constancy floor: " << r.renorm.constancy.str() << "\n";
  for (const pv::DiscrepancyRecord& d : r.discrepancy) {
    os << "r(" << d.index << ") floor: " << d.residual_floor.str()
       << "  [rational " << d.rational_floor.str() << ", nonrational "
       << d.nonrational_floor.str() << "]\n";
  }
  for (const pv::InfraCheck& c : r.infra_checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail
       << ")\n";
  }
  os << (r.infra_pass ? "infra: all checks pass" : "infra: FAILURE") << "\n";
  if (r.config.strict) {
    os << "strict gate (>= " << (r.config.target_digits - r.guard_digits)
       << " digits): " << (r.strict_pass ? "met" : "not met") << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-sum logarithm verification harness for Q_p(zeta_p)"};
  app.require_subcommand(1);

  const long default_n = env_long("PADIC_VERIFY_N", 100);
  const long default_threads = env_long("PADIC_VERIFY_THREADS", 1);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the full protocol");
  long v_p = 0;
  long v_n = default_n;
  long v_guard = 0;
  long v_gamma = 0;
  bool v_strict = false;
  bool v_skip = false;
  std::string v_convention = "auto";
  long v_threads = default_threads;
  unsigned long v_seed = pv::kDefaultSeed;
  bool v_timings = false;
  std::string v_format = "json";
  std::string v_out;
  cmd_verify->add_option("-p,--prime", v_p, "prime")->required();
  cmd_verify->add_option("-N,--digits", v_n, "target digits");
  cmd_verify->add_option("-G,--guard", v_guard, "guard digits (0 = policy)");
  cmd_verify->add_option("-M,--gamma-digits", v_gamma,
                         "gamma cross-check digits (0 = default)");
  cmd_verify->add_flag("--strict", v_strict,
                       "exit 3 when measured floors fall short of N - G");
  cmd_verify->add_flag("--skip-gamma-check", v_skip,
                       "skip the gamma cross-checks");
  cmd_verify->add_option("--convention", v_convention,
                         "gauss convention: auto, standard, "
                         "conjugate_exponent, zeta_squared");
  cmd_verify->add_option("--threads", v_threads, "worker budget");
  cmd_verify->add_option("--seed", v_seed, "seed echoed in the report");
  cmd_verify->add_flag("--timings", v_timings, "include step timings");
  cmd_verify->add_option("--format", v_format, "json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd_verify->add_option("-o,--output", v_out, "output path (default stdout)");

  // table
  auto* cmd_table = app.add_subcommand("table", "protocol summary rows, CSV");
  std::vector<long> t_primes{5, 7};
  long t_n = default_n;
  bool t_strict = false;
  bool t_skip = false;
  long t_threads = default_threads;
  std::string t_out;
  cmd_table->add_option("-p,--primes", t_primes, "comma-separated primes")
      ->delimiter(',');
  cmd_table->add_option("-N,--digits", t_n, "target digits");
  cmd_table->add_flag("--strict", t_strict, "strict floor gate");
  cmd_table->add_flag("--skip-gamma-check", t_skip,
                      "skip the gamma cross-checks");
  cmd_table->add_option("--threads", t_threads, "worker budget");
  cmd_table->add_option("-o,--output", t_out, "output path (default stdout)");

  // gauss
  auto* cmd_gauss = app.add_subcommand("gauss", "print tau(omega^-a)");
  long g_p = 0;
  long g_a = 0;
  long g_digits = 40;
  std::string g_convention = "standard";
  cmd_gauss->add_option("-p,--prime", g_p, "prime")->required();
  cmd_gauss->add_option("-a,--index", g_a, "character index")->required();
  cmd_gauss->add_option("-N,--digits", g_digits, "digits");
  cmd_gauss->add_option("--convention", g_convention, "gauss convention");

  // gamma
  auto* cmd_gamma = app.add_subcommand("gamma", "print Gamma_p(num/den)");
  long ga_p = 0;
  long ga_num = 0;
  long ga_den = 0;
  long ga_m = 0;
  cmd_gamma->add_option("-p,--prime", ga_p, "prime")->required();
  cmd_gamma->add_option("--num", ga_num, "argument numerator")->required();
  cmd_gamma->add_option("--den", ga_den, "argument denominator (0 = p-1)");
  cmd_gamma->add_option("-M,--gamma-digits", ga_m, "digits (0 = default)");

  // lfun
  auto* cmd_lfun = app.add_subcommand(
      "lfun", "print L_p(0, chi omega) and its derivative");
  long lf_p = 0;
  long lf_k = 0;
  long lf_n = default_n;
  cmd_lfun->add_option("-p,--prime", lf_p, "prime")->required();
  cmd_lfun->add_option("-k,--exponent", lf_k, "character exponent")
      ->required();
  cmd_lfun->add_option("-N,--digits", lf_n, "target digits");

  // constants
  auto* cmd_constants =
      app.add_subcommand("constants", "print the recovered constants");
  long c_p = 0;
  long c_n = default_n;
  bool c_skip = false;
  std::string c_out;
  cmd_constants->add_option("-p,--prime", c_p, "prime")->required();
  cmd_constants->add_option("-N,--digits", c_n, "target digits");
  cmd_constants->add_flag("--skip-gamma-check", c_skip,
                          "skip the gamma cross-checks");
  cmd_constants->add_option("-o,--output", c_out,
                            "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_verify) {
      check_prime(v_p, v_skip);
      pv::ProtocolConfig cfg;
      cfg.p = v_p;
      cfg.target_digits = v_n;
      cfg.guard = v_guard;
      cfg.gamma_digits = v_gamma;
      cfg.strict = v_strict;
      cfg.skip_gamma_check = v_skip;
      cfg.convention = v_convention;
      cfg.threads = v_threads;
      cfg.seed = v_seed;
      cfg.with_timings = v_timings;
      pv::VerificationReport report = pv::run_protocol(cfg);
      if (v_format == "json") {
        write_out(v_out, pv::render_report_json(report));
      } else if (v_format == "csv") {
        write_out(v_out, pv::csv_header() + "\n" + pv::csv_row(report) + "\n");
      } else {
        write_out(v_out, text_summary(report));
      }
      return report.exit_code;
    }

    if (*cmd_table) {
      int worst = 0;
      std::ostringstream os;
      os << pv::csv_header() << "\n";
      for (long p : t_primes) {
        check_prime(p, t_skip);
        pv::ProtocolConfig cfg;
        cfg.p = p;
        cfg.target_digits = t_n;
        cfg.strict = t_strict;
        cfg.skip_gamma_check = t_skip;
        cfg.threads = t_threads;
        pv::VerificationReport report = pv::run_protocol(cfg);
        os << pv::csv_row(report) << "\n";
        worst = std::max(worst, report.exit_code);
      }
      write_out(t_out, os.str());
      return worst;
    }

    if (*cmd_gauss) {
      check_prime(g_p, false);
      if (g_digits < 1) throw pv::DomainError("digits must be >= 1");
      pv::TeichmullerTable roots(g_p, g_digits);
      pv::CycloElement tau =
          pv::gauss_sum(g_a, roots, pv::parse_convention(g_convention));
      std::cout << "tau(omega^-" << g_a << ") = " << tau.str() << "\n";
      pv::CycloValuation val = tau.valuation();
      if (val.kind == pv::CycloValuation::Kind::Exact) {
        std::cout << "valuation = " << val.v.str() << "\n";
      } else {
        std::cout << "valuation >= " << val.v.str() << "\n";
      }
      return 0;
    }

    if (*cmd_gamma) {
      check_prime(ga_p, false);
      long den = ga_den == 0 ? ga_p - 1 : ga_den;
      long m = ga_m == 0 ? pv::default_gamma_digits(ga_p) : ga_m;
      pv::BigRat x(ga_num, den);
      x.canonicalize();
      pv::PadicScalar g =
          pv::morita_gamma(ga_p, x, m, m, pv::kDefaultGammaCostBound);
      std::cout << "Gamma_p(" << ga_num << "/" << den << ") = " << g.str()
                << "\n";
      return 0;
    }

    if (*cmd_lfun) {
      check_prime(lf_p, false);
      pv::DirichletCharacter chi{lf_p, lf_k};
      long guard = pv::PrecisionPolicy::min_guard(lf_p, lf_n);
      long working = lf_n + guard;
      pv::TeichmullerTable roots(lf_p, working);
      pv::BernoulliCache bern(pv::kl_truncation_index(lf_p, working));
      pv::Jet out = pv::kubota_leopoldt(chi, roots, bern);
      std::cout << "L_p(0, chi_" << lf_k << " omega) = " << out.value.str()
                << "\n";
      std::cout << "L_p'(0, chi_" << lf_k << " omega) = " << out.deriv.str()
                << "\n";
      return 0;
    }

    if (*cmd_constants) {
      check_prime(c_p, c_skip);
      pv::ProtocolConfig cfg;
      cfg.p = c_p;
      cfg.target_digits = c_n;
      cfg.skip_gamma_check = c_skip;
      pv::VerificationReport report = pv::run_protocol(cfg);
      std::ostringstream os;
      os << "U1 = " << report.constants.u1.str() << "\n";
      os << "U2 = " << report.constants.u2.str() << "\n";
      os << "source pair = (" << report.constants.source_exponents.first
         << ", " << report.constants.source_exponents.second
         << "), det valuation = " << report.constants.det_valuation << "\n";
      for (const auto& [exponent, floor] : report.constants.per_chi_fit) {
        os << "fit floor (k=" << exponent << "): " << floor.str() << "\n";
      }
      os << "U2 + p v(1) floor: " << report.constants.u2_prediction.str()
         << "\n";
      for (const auto& [exponent, value] : report.constants.cp_per_chi) {
        os << "Cp (k=" << exponent << ") = " << value.str() << "\n";
      }
      os << "Cp independence floor: "
         << report.constants.cp_independence.str() << "\n";
      os << "U1 + (1-p) Cp floor: " << report.constants.u1_prediction.str()
         << "\n";
      write_out(c_out, os.str());
      return report.exit_code;
    }
  } catch (const pv::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const pv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const pv::Error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
